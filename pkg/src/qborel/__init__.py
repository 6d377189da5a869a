"""qborel: exact symbolic engine for quantum Borel algebras at odd roots
of unity and the lifting relations of the associated pointed Hopf algebras.
"""

from qborel.qarith import CycloCtx, CycloNum

__all__ = ["CycloCtx", "CycloNum"]
__version__ = "0.1.0"
