"""Command-line surface.

qborel lift   --type B --rank 2 --N 11 [--orders 11,22] [--mu file.json]
              [--format text|json|latex] [--out PATH]
qborel verify {coproduct,frobenius,qybe,crosscheck,confluence,all}
              --type B --rank 2 --N 11 [--n 5] [--max-terms K]
              [--max-seconds S] [--out PATH]

Exit codes: 0 success, 1 verification failure, 2 input error, 3 budget
exhausted.  Identical configuration produces byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction


def _build_parser():
    p = argparse.ArgumentParser(
        prog="qborel",
        description="exact quantum Borel engine: verification suites and "
                    "lifted power relations")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--type", dest="kind", choices=("A", "B", "D"))
        sp.add_argument("--rank", type=int)
        sp.add_argument("--N", type=int, required=True)
        sp.add_argument("--out")

    lift = sub.add_parser("lift", help="emit the deformed power relations")
    common(lift)
    lift.add_argument("--orders",
                      help="comma-separated group orders (default: N each)")
    lift.add_argument("--mu", default="symbolic",
                      help="'symbolic' or a JSON file {\"i,j\": rational}")
    lift.add_argument("--format", dest="fmt",
                      choices=("text", "json", "latex"), default="text")

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("suite", choices=("coproduct", "frobenius", "qybe",
                                       "crosscheck", "confluence", "all"))
    common(ver)
    ver.add_argument("--n", type=int,
                     help="matrix size for coproduct/frobenius/qybe/"
                          "confluence (overrides --rank)")
    ver.add_argument("--max-terms", type=int)
    ver.add_argument("--max-seconds", type=float)
    return p


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_mu(path, rs):
    with open(path) as fh:
        raw = json.load(fh)
    values = {}
    for key, val in raw.items():
        lab = tuple(int(x) for x in key.split(","))
        if lab not in rs.coeffs:
            raise ValueError("mu key %r is not a positive-root label" % key)
        values[lab] = Fraction(str(val))
    for lab in rs.labels:
        values.setdefault(lab, 0)
    from qborel.cartan import MuFamily
    return MuFamily(rs, values)


def _resolve_n(args):
    if args.n:
        return args.n
    if args.kind and args.rank:
        return {"A": args.rank + 1, "B": 2 * args.rank + 1,
                "D": 2 * args.rank}[args.kind]
    raise ValueError("need --n, or --type with --rank")


class _Budget:
    def __init__(self, seconds):
        self.t0 = time.time()
        self.seconds = seconds

    def check(self, done):
        if self.seconds and time.time() - self.t0 > self.seconds:
            raise TimeoutError("time budget exhausted after %s" % done)


def cmd_lift(args):
    from qborel.qarith import CycloCtx
    from qborel.cartan import (root_system, datum_build, MuFamily,
                               mu_validate)
    from qborel.lifting import (mu_from_family, presentation_document,
                                render_text, render_json, render_latex)
    ctx = CycloCtx(args.N)
    if not args.kind or not args.rank:
        raise ValueError("lift needs --type and --rank")
    rs = root_system(args.kind, args.rank)
    # default group orders N^2 = (ell_i N with ell_i = N): with plain
    # order N every g_alpha^N is trivial and admissibility forces mu = 0
    orders = ([int(x) for x in args.orders.split(",")] if args.orders
              else [ctx.N * ctx.N] * args.rank)
    datum = datum_build(rs, ctx, orders)
    family = (MuFamily.symbolic(rs) if args.mu == "symbolic"
              else _load_mu(args.mu, rs))
    family = mu_validate(datum, family)
    mu = mu_from_family(ctx, family)
    doc = presentation_document(ctx, args.kind, args.rank, mu=mu,
                                orders=orders)
    render = {"text": render_text, "json": render_json,
              "latex": render_latex}[args.fmt]
    _emit(render(doc), args.out)
    return 0


def _suite_coproduct(args, budget):
    from qborel.qarith import CycloCtx
    from qborel.qfunc.presentations import borel_presentation
    from qborel.qfunc.verify import verify_coproduct_theorem
    ctx = CycloCtx(args.N)
    pres = borel_presentation(ctx, args.kind or "B", _resolve_n(args))
    rep = verify_coproduct_theorem(pres, max_terms=args.max_terms)
    budget.check("coproduct")
    return {"coproduct": rep}, rep["ok"]


def _suite_frobenius(args, budget):
    from qborel.qarith import CycloCtx
    from qborel.qfunc.presentations import borel_presentation
    from qborel.qfunc.verify import verify_frobenius_theorem
    ctx = CycloCtx(args.N)
    pres = borel_presentation(ctx, args.kind or "B", _resolve_n(args))
    rep = verify_frobenius_theorem(pres)
    budget.check("frobenius")
    return {"frobenius": rep}, rep["ok"]


def _suite_qybe(args, budget):
    from qborel.qarith import CycloCtx
    from qborel.qfunc.rmatrix import so_rmatrix, qybe_check
    ctx = CycloCtx(args.N)
    n = _resolve_n(args)
    ok, witness = qybe_check(so_rmatrix(ctx, n))
    budget.check("qybe")
    rep = {"n": n, "N": args.N, "ok": ok}
    if witness is not None:
        rep["witness"] = list(witness)
    return {"qybe": rep}, ok


def _suite_crosscheck(args, budget):
    from qborel.qarith import CycloCtx
    from qborel.lifting import cross_check
    if not args.kind or not args.rank:
        raise ValueError("crosscheck needs --type and --rank")
    ctx = CycloCtx(args.N)
    rep = cross_check(ctx, args.kind, args.rank)
    budget.check("crosscheck")
    rep["roots"] = [{"label": list(e["label"]), "ok": e["ok"],
                     "augmentation_zero": e["augmentation_zero"],
                     **({"difference": e["difference"]}
                        if "difference" in e else {})}
                    for e in rep["roots"]]
    return {"crosscheck": rep}, rep["ok"]


def _suite_confluence(args, budget):
    from qborel.qarith import CycloCtx
    from qborel.qfunc.presentations import borel_presentation
    ctx = CycloCtx(args.N)
    pres = borel_presentation(ctx, args.kind or "B", _resolve_n(args))
    failures = pres.system.check_local_confluence()
    budget.check("confluence")
    rep = {"rules": len(pres.system),
           "completed_rules": [pres.alg.word_str(w)
                               for w in pres.completion_log],
           "unresolved_pairs": len(failures),
           "ok": not failures}
    return {"confluence": rep}, rep["ok"]


_SUITES = {
    "coproduct": _suite_coproduct,
    "frobenius": _suite_frobenius,
    "qybe": _suite_qybe,
    "crosscheck": _suite_crosscheck,
    "confluence": _suite_confluence,
}


def cmd_verify(args):
    budget = _Budget(args.max_seconds)
    suites = (list(_SUITES) if args.suite == "all" else [args.suite])
    report = {}
    ok = True
    for name in suites:
        sub, sub_ok = _SUITES[name](args, budget)
        report.update(sub)
        ok = ok and sub_ok
    report["ok"] = ok
    _emit(json.dumps(report, indent=2, sort_keys=True) + "\n", args.out)
    return 0 if ok else 1


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "lift":
            return cmd_lift(args)
        return cmd_verify(args)
    except TimeoutError as e:
        print("budget: %s" % e, file=sys.stderr)
        return 3
    except (ValueError, OSError, json.JSONDecodeError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except RuntimeError as e:
        # rewrite/tensor budgets surface as RuntimeError subclasses
        print("budget: %s" % e, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
