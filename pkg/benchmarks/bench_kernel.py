"""Compare the compiled and pure-Python straightening kernels on the
hot paths: plain normal forms and tensor-square power steps.

Run:  python3 benchmarks/bench_kernel.py [--n 4] [--N 11] [--steps 6]
"""

import argparse
import time

from qborel.qarith import CycloCtx
from qborel.ncalg import _kernel_py
from qborel.qfunc.presentations import BorelPresentation

try:
    from qborel import _speedups
except ImportError:
    _speedups = None


def bench_nf(kernel, system, poly, repeat):
    items = list(poly.terms.items())
    cache = {}
    t0 = time.perf_counter()
    for _ in range(repeat):
        out = kernel.nf_terms(system.rules, system.lengths, items, 10 ** 9,
                              cache)
    return time.perf_counter() - t0, out


def bench_tensor(kernel, system, tp, steps):
    terms = {((), ()): tp.alg.ctx.one()}
    cache = {}
    t0 = time.perf_counter()
    for _ in range(steps):
        terms = kernel.tensor_step(system.rules, system.lengths, terms,
                                   tp.terms, 10 ** 9, cache)
    return time.perf_counter() - t0, terms


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--N", type=int, default=11)
    ap.add_argument("--steps", type=int, default=6)
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args()

    ctx = CycloCtx(args.N)
    pres = BorelPresentation("D", args.n, ctx)
    system = pres.system
    # a deliberately messy power touching redundant letters
    poly = pres.z(1, args.n) + pres.z(1, 2) + pres.z(2, 2)
    poly = poly * poly * poly * poly
    tp = pres.delta(1, args.n)

    kernels = [("python", _kernel_py)]
    if _speedups is not None:
        kernels.append(("cython", _speedups))

    print("D%d Borel quotient, N=%d, %d rules" % (args.n, args.N,
                                                  len(system)))
    results = {}
    for name, kernel in kernels:
        dt, out = bench_nf(kernel, system, poly, args.repeat)
        results.setdefault("nf", {})[name] = (dt, out)
        print("nf_terms      %-6s %8.3fs  (%d repeats, %d result terms)"
              % (name, dt, args.repeat, len(out)))
    for name, kernel in kernels:
        dt, out = bench_tensor(kernel, system, tp, args.steps)
        results.setdefault("tensor", {})[name] = (dt, out)
        print("tensor_step   %-6s %8.3fs  (%d steps, %d result terms)"
              % (name, dt, args.steps, len(out)))
    for job, res in results.items():
        outs = [v[1] for v in res.values()]
        assert all(o == outs[0] for o in outs), "kernel disagreement in " + job
        if len(res) == 2:
            print("%s speedup: %.1fx" % (job, res["python"][0] /
                                         max(res["cython"][0], 1e-9)))


if __name__ == "__main__":
    main()
