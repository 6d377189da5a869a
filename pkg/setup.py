"""Build the optional compiled straightening kernel.

The package is fully functional without it (the pure-Python kernel in
qborel.ncalg._kernel_py is selected at import time when the extension is
absent or QBOREL_PURE=1 is set)."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    ext_modules = cythonize(
        ["src/qborel/_speedups.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
