"""Acceptance gate: one test (one pass/fail line under pytest -v) per
criterion.  Every comparison is exact — all arithmetic happens in Q(q)
with tolerance zero; the only inequalities are the stated time budgets.
"""

import json
import os
import time
from fractions import Fraction

import pytest

from qborel.qarith import CycloCtx
from qborel.cartan import MuFamily, datum_build, mu_validate, root_system
from qborel.lifting import (cross_check, lift_closed, mu_symbols,
                            presentation_document, torus_oracle_check,
                            unipotent_matrix)
from qborel.ncalg import Algebra, IdealOracle, NcPoly, RuleSystem
from qborel.qfunc.presentations import borel_presentation
from qborel.qfunc.rmatrix import qybe_check, so_rmatrix
from qborel.qfunc.verify import (verify_centrality,
                                 verify_coproduct_theorem,
                                 verify_frobenius_theorem)

GOLDEN = os.path.join(os.path.dirname(os.path.abspath(__file__)), "golden")


def test_criterion_1_coproduct_closed_form():
    # Delta(z_ij)^N equals sum_k c^k_ij z_ik^N (x) z_kj^N for every
    # upper pair, B n=5 and D n=4 at N=11; <= 5 minutes per (n, N) case
    ctx = CycloCtx(11)
    for kind, n in (("D", 4), ("B", 5)):
        pres = borel_presentation(ctx, kind, n)
        t0 = time.time()
        rep = verify_coproduct_theorem(pres)
        elapsed = time.time() - t0
        assert rep["ok"], (kind, n, rep)
        assert len(rep["cases"]) == n * (n + 1) // 2
        assert elapsed <= 300.0, (kind, n, elapsed)


def test_criterion_2_dual_frobenius():
    # scalar coalgebra-map identity, quantum orthogonality of the iota
    # images, determinant image 1; n=5, N=11
    pres = borel_presentation(CycloCtx(11), "B", 5)
    rep = verify_frobenius_theorem(pres)
    assert rep["ok"], rep
    assert rep["determinant"] is True
    assert rep["scalar"] == []
    assert all(e["ok"] for e in rep["orthogonality"])


def test_criterion_3_yang_baxter():
    for N in (11, 13):
        ctx = CycloCtx(N)
        for n in (4, 5, 7):
            t0 = time.time()
            ok, witness = qybe_check(so_rmatrix(ctx, n))
            elapsed = time.time() - t0
            assert ok and witness is None, (n, N, witness)
            assert elapsed <= 60.0, (n, N, elapsed)


def test_criterion_4_lifting_cross_check():
    # functional pipeline vs transcribed closed theorems, exact symbolic
    # mu agreement, plus the independent torus-functional oracle
    cases = ([("A", t) for t in (1, 2, 3, 4)] +
             [("B", t) for t in (2, 3)] +
             [("D", t) for t in (4, 5)])
    for N in (11, 13):
        ctx = CycloCtx(N)
        for kind, theta in cases:
            t0 = time.time()
            rep = cross_check(ctx, kind, theta)
            assert rep["ok"], (kind, theta, N, rep)
            oracle = torus_oracle_check(ctx, kind, theta)
            assert oracle["ok"], (kind, theta, N, oracle["witnesses"])
            assert time.time() - t0 <= 120.0, (kind, theta, N)


def test_criterion_5_golden_coefficients():
    # byte-compare against the independently transcribed golden files
    ctx = CycloCtx(11)

    def read(name):
        with open(os.path.join(GOLDEN, name), "rb") as fh:
            return fh.read()

    qb2 = unipotent_matrix(ctx, "B", 2, mu_symbols("B", 2, ctx))
    assert ("r_23 = %s\nr_24 = %s\n"
            % (qb2.r(2, 3), qb2.r(2, 4))).encode() == read("b2_entries.txt")

    rel = lift_closed(ctx, "B", 2, mu_symbols("B", 2, ctx), (1, 4))
    assert (str(rel) + "\n").encode() == read("b2_relation_14.txt")

    qb3 = unipotent_matrix(ctx, "B", 3, mu_symbols("B", 3, ctx))
    lines = ["r_%d%d = %s" % (i, j, qb3.r(i, j))
             for (i, j) in ((3, 5), (3, 4), (2, 6), (2, 5), (2, 4), (2, 3))]
    assert ("\n".join(lines) + "\n").encode() == read("b3_identities.txt")

    qd5 = unipotent_matrix(ctx, "D", 5, mu_symbols("D", 5, ctx))
    lines = ["r_%d%d = %s" % (i, j, qd5.r(i, j))
             for (i, j) in ((3, 5), (3, 6), (3, 7), (3, 8))]
    assert ("\n".join(lines) + "\n").encode() == read("d5_entries.txt")


def test_criterion_6_dimension_bookkeeping():
    # emitted dimension N^{|Phi+|} * prod(ell_i N) matches independent
    # arithmetic, with |Phi+| cross-checked against the series formulas
    npos_formula = {"A": lambda t: t * (t + 1) // 2,
                    "B": lambda t: t * t,
                    "D": lambda t: t * (t - 1)}
    for N in (11, 13):
        ctx = CycloCtx(N)
        for kind, theta, ells in (("A", 2, (1, 2)), ("A", 3, (1, 1, 1)),
                                  ("B", 2, (2, 3)), ("B", 3, (1, 2, 1)),
                                  ("D", 4, (1, 1, 2, 1))):
            orders = [l * N for l in ells]
            doc = presentation_document(ctx, kind, theta, orders=orders)
            npos = len(root_system(kind, theta).labels)
            assert npos == npos_formula[kind](theta)
            assert doc["dimension"]["positive_roots"] == npos
            want = N ** npos
            for o in orders:
                want *= o
            assert doc["dimension"]["total"] == str(want)
            parsed = json.loads(json.dumps(doc))
            assert parsed["dimension"]["total"] == str(want)


def test_criterion_7_structural_properties():
    ctx = CycloCtx(11)
    # centrality of every z_ij^N, all series at n <= 5
    for kind, n in (("A", 2), ("A", 3), ("A", 4), ("A", 5),
                    ("B", 5), ("D", 4)):
        rep = verify_centrality(borel_presentation(ctx, kind, n))
        assert rep["ok"], (kind, n, rep["witnesses"])

    # augmentation-ideal membership of every fully expanded r_alpha(mu)
    for kind, theta in (("A", 4), ("B", 3), ("D", 4), ("D", 5)):
        rep = cross_check(ctx, kind, theta)
        assert all(e["augmentation_zero"] for e in rep["roots"])

    # mu-admissibility forcing: mu_alpha = 0 whenever g_alpha^N = 1 or
    # chi_alpha^N != epsilon.  On the mixed-order group the order-N
    # factors force exactly the simple roots supported on them (B/D have
    # identity g-vectors); with all orders N everything is forced
    cases = (("A", 2, [11, 11], None),
             ("B", 2, [11, 121], frozenset({(1, 2)})),
             ("D", 4, [11, 121, 11, 121], frozenset({(1, 2), (3, 4)})),
             ("B", 2, [121, 121], frozenset()))
    for kind, theta, orders, want in cases:
        rs = root_system(kind, theta)
        datum = datum_build(rs, ctx, orders)
        fam = mu_validate(datum, MuFamily.symbolic(rs))
        if want is None:
            want = frozenset(rs.labels)  # all orders N: every g_alpha^N=1
        assert fam.forced_zero == want, (kind, theta, orders)
        for lab in rs.labels:
            coeffs = rs.coeffs[lab]
            trivial = datum.g_alpha_N_trivial(coeffs) or \
                not datum.chi_alpha_N_trivial(coeffs)
            assert (lab in fam.forced_zero) == trivial
            assert fam.values[lab] == (0 if lab in fam.forced_zero
                                       else None)

    # q^2-binomial collapse (a + b)^N = a^N + b^N for ba = q^2 ab
    for N in (11, 13):
        c = CycloCtx(N)
        alg = Algebra(c)
        a = alg.add_generator("a")
        b = alg.add_generator("b")
        system = RuleSystem(alg)
        system.add_rule((b, a), {(a, b): c.q() * c.q()})
        p = system.power_nf(alg.gen("a") + alg.gen("b"), N)
        assert p.terms == {(a,) * N: c.one(), (b,) * N: c.one()}


def test_criterion_8_confluence_and_ideal_membership():
    # critical-pair check passes (with logged bounded completion) for
    # A n<=4, B n=5, D n=4; every derived straightening identity among
    # the coordinate letters of degree <= 3 is a bound-3 ideal member
    # (that is all of them for D, all but the two high-degree redundant-
    # letter solving rules for B, all inverse-free rules for A); the
    # localized-inverse and high-degree rules are covered by the
    # complementary inclusion nf(defining relation) = 0
    ctx = CycloCtx(11)
    for kind, n in (("A", 2), ("A", 3), ("A", 4), ("B", 5), ("D", 4)):
        pres = borel_presentation(ctx, kind, n)
        assert pres.system.check_local_confluence() == []
        assert isinstance(pres.completion_log, list)

        for r in pres.relations:
            assert pres.system.nf(r).is_zero()

        alg = pres.alg
        inverse_letters = {alg.index[g] for g in alg.index
                           if g[0] == "z~"}
        oracle = IdealOracle(alg, pres.relations, 3)
        skipped_degree = 0
        for lhs, rhs in pres.system.rules.items():
            words = [lhs] + [w for w, _ in rhs]
            if any(g in inverse_letters for w in words for g in w):
                continue
            if max(len(w) for w in words) > 3:
                skipped_degree += 1
                continue
            p = NcPoly(alg, {lhs: ctx.one()}) - NcPoly(alg, dict(rhs))
            assert oracle.contains(p), (kind, n, lhs)
        assert skipped_degree == (2 if (kind, n) == ("B", 5) else 0)
