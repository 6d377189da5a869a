"""Brute-force verification of the N-th-power theorems on the Borel
quotients.

* delta_powerN — computes Delta(z_ij)^N exactly in the tensor square and
  compares it with the closed group-like expression
  sum_k c^k_ij z_ik^N (x) z_kj^N (the coefficient c^k differs from 1 only
  at the middle index of the odd orthogonal series).
* dual Frobenius map iota(X_ij) = gamma_ij z_ij^N: coalgebra-map scalar
  identity, quantum orthogonality of the X-matrix, determinant 1.
* centrality of all z_ij^N.
* psi_image — images of the upper-triangular quantum-group root vectors
  inside the Borel quotient, both as the closed monomial formula and by
  running the defining recursion through the engine; equality of the two
  is a consistency check on every transcribed scalar.
"""

from __future__ import annotations

import time

from qborel.ncalg import NcPoly, TensorPoly


# -- N-th power of the coproduct ----------------------------------------------

def delta_powerN(pres, i, j, max_terms=None, progress=None):
    """nf(Delta(z_ij)^N), straightened factorwise in the tensor square."""
    return pres.system.tensor_power_nf(pres.delta(i, j), pres.ctx.N,
                                       max_terms=max_terms,
                                       progress=progress)


def closed_delta_powerN(pres, i, j):
    """sum_{k=i..j} c^k_ij * nf(z_ik^N) (x) nf(z_kj^N)."""
    out = TensorPoly(pres.alg, {})
    for k in range(i, j + 1):
        p1, p2 = pres.power_n(i, k), pres.power_n(k, j)
        out = out + pres.c_coeff(i, j, k) * TensorPoly.of(p1, p2)
    return out


def verify_coproduct_theorem(pres, pairs=None, max_terms=None,
                             progress=None):
    """Compare Delta(z_ij)^N with its closed form for every upper pair
    (or the given pairs).  Returns a report dict."""
    if pairs is None:
        pairs = [(i, j) for i in range(1, pres.n + 1)
                 for j in range(i, pres.n + 1)]
    cases = []
    ok_all = True
    for (i, j) in pairs:
        t0 = time.time()
        lhs = delta_powerN(pres, i, j, max_terms=max_terms,
                           progress=progress)
        rhs = closed_delta_powerN(pres, i, j)
        ok = lhs == rhs
        ok_all = ok_all and ok
        cases.append({"pair": (i, j), "ok": ok,
                      "terms": len(lhs.terms),
                      "seconds": time.time() - t0})
    return {"ok": ok_all, "cases": cases}


# -- dual Frobenius map --------------------------------------------------------

def frobenius_iota(pres, i, j):
    """iota(X_ij) = gamma_ij * nf(z_ij^N)."""
    return pres.gamma(i, j) * pres.power_n(i, j)


def verify_frobenius_theorem(pres, check_coproduct=False, max_terms=None):
    """Check that iota is a well-defined Hopf-algebra inclusion on the
    classical coordinate ring:

    * scalar identity c^k_ij * gamma_ij = gamma_ik * gamma_kj, which
      together with the coproduct theorem makes iota a coalgebra map
      (optionally re-verified by brute force with check_coproduct=True);
    * orthogonality sum_{k=i..j} iota(X_{k'i'}) iota(X_kj) = delta_ij;
    * determinant prod_k iota(X_kk) = 1.
    """
    ctx, n = pres.ctx, pres.n
    report = {"ok": True, "scalar": [], "orthogonality": [],
              "determinant": None}

    for i in range(1, n + 1):
        for j in range(i, n + 1):
            for k in range(i, j + 1):
                lhs = pres.c_coeff(i, j, k) * pres.gamma(i, j)
                rhs = pres.gamma(i, k) * pres.gamma(k, j)
                ok = lhs == rhs
                report["ok"] = report["ok"] and ok
                if not ok:
                    report["scalar"].append((i, j, k))

    if pres.kind != "A":
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                acc = pres.alg.zero()
                for k in range(i, j + 1):
                    a = frobenius_iota(pres, pres.prime(k), pres.prime(i))
                    b = frobenius_iota(pres, k, j)
                    acc = acc + pres.system.mul_nf(a, b)
                want = pres.alg.one() if i == j else pres.alg.zero()
                ok = pres.system.nf(acc) == want
                report["ok"] = report["ok"] and ok
                report["orthogonality"].append({"pair": (i, j), "ok": ok})

    det = pres.alg.one()
    for k in range(1, n + 1):
        det = pres.system.mul_nf(det, frobenius_iota(pres, k, k))
    det_ok = det == pres.alg.one()
    report["determinant"] = det_ok
    report["ok"] = report["ok"] and det_ok

    if check_coproduct:
        cop = verify_coproduct_theorem(pres, max_terms=max_terms)
        report["coproduct"] = cop
        report["ok"] = report["ok"] and cop["ok"]
    return report


# -- centrality of N-th powers -------------------------------------------------

def verify_centrality(pres):
    """Every z_ij^N is central in the Borel quotient."""
    gens = [pres.z(a, b) for a in range(1, pres.n + 1)
            for b in range(a, pres.n + 1) if pres.zword(a, b)]
    if pres.kind == "A":
        gens += [pres.zinv(a) for a in range(1, pres.n + 1)]
    witnesses = []
    for i in range(1, pres.n + 1):
        for j in range(i, pres.n + 1):
            p = pres.power_n(i, j)
            for g in gens:
                if pres.system.nf(p * g - g * p) != pres.alg.zero():
                    witnesses.append((i, j))
                    break
    return {"ok": not witnesses, "witnesses": witnesses}


# -- root-vector images --------------------------------------------------------

def _theta(pres):
    return (pres.n - 1) // 2 if pres.kind != "D" else pres.n // 2


def psi_image(pres, i, j):
    """Closed formula for the image of the root vector E_(ij) in the
    Borel quotient (a scalar times a two-letter monomial)."""
    ctx = pres.ctx
    q = ctx.q()
    lam_inv = (q - q.inv()).inv()
    if pres.kind == "A":
        sign = ctx.from_int((-1) ** (j - i))
        return sign * ctx.qpow(i - j + 1) * lam_inv * \
            pres.system.nf(pres.z(i, j) * pres.zinv(j))
    theta = _theta(pres)
    jp, ip = pres.prime(j), pres.prime(i)
    body = pres.system.nf(pres.z(jp, ip) * pres.z(i, i))
    sign = ctx.from_int(-1 if (theta + 1 - j) % 2 else 1)
    if pres.kind == "B":
        if j <= theta + 1:
            scal = ctx.qpow(j - i + 1 - (1 if j == theta + 1 else 0))
        else:
            scal = sign * ctx.qpow_half(2 * (j - i) - 1)
    else:
        # type D carries one extra sign for every root through the fork
        # (j >= theta+1), fixed against the recursion run in the engine
        if j <= theta + 1:
            scal = ctx.qpow(j - i + 1 - (1 if j == theta + 1 else 0))
            if j == theta + 1:
                scal = -scal
        else:
            scal = -sign * ctx.qpow(j - i)
    return scal * lam_inv * body


def psi_image_recursive(pres, i, j):
    """Image of E_(ij) computed by running the root-vector recursion
    through the engine, from the simple-root images only."""
    ctx = pres.ctx
    q = ctx.q()
    lam_inv = (q - q.inv()).inv()
    theta = _theta(pres)
    nf, mul = pres.system.nf, pres.system.mul_nf

    def simple(k):
        if pres.kind == "A":
            return -1 * lam_inv * nf(pres.z(k, k + 1) * pres.zinv(k + 1))
        if pres.kind == "B":
            kp = pres.prime(k)
            return ctx.qpow(2 - (1 if k == theta else 0)) * lam_inv * \
                nf(pres.z(kp - 1, kp) * pres.z(k, k))
        kp = pres.prime(k)
        off = 2 if k == theta else 1
        return ctx.qpow(2) * lam_inv * \
            nf(pres.z(kp - off, kp) * pres.z(k, k))

    def E(i, j):
        if pres.kind == "A":
            if j == i + 1:
                return simple(i)
            a, b = E(i, j - 1), simple(j - 1)
            return nf(mul(a, b) - q.inv() * mul(b, a))
        if pres.kind == "B":
            if j == i + 1:
                return simple(i)
            a = E(i, j - 1)
            if j <= theta + 1:
                b = simple(j - 1)
                return nf(mul(b, a) - q.inv() * mul(a, b))
            b = simple(pres.prime(j))
            coef = ctx.qpow(-1 + (1 if j == theta + 2 else 0))
            return nf(mul(b, a) - coef * mul(a, b))
        # type D
        if j == i + 1:
            return simple(i)
        if (i, j) == (theta - 1, theta + 1):
            return simple(theta)
        if j <= theta:
            a, b = E(i, j - 1), simple(j - 1)
        elif j == theta + 1:
            a, b = E(i, theta - 1), simple(theta)
        else:
            a, b = E(i, j - 1), simple(pres.prime(j))
        return nf(mul(b, a) - q.inv() * mul(a, b))

    return E(i, j)


def verify_psi_recursion(pres, labels):
    """Closed root-vector images agree with the recursion for every
    label; returns the failing labels."""
    bad = []
    for (i, j) in labels:
        if psi_image(pres, i, j) != psi_image_recursive(pres, i, j):
            bad.append((i, j))
    return bad
