"""The orthogonal-series R-matrix and the quantum Yang-Baxter check.

Conventions (all exact in Q(q); half powers use the odd-N convention
q^{1/2} := q^{(N+1)/2}):

  k' = n+1-k,   rho_i = n/2 - i (i < i'),  rho_{i'} = -rho_i,
  J = (c_ij),   c_ij = delta_{i,j'} q^{-rho_i},       J^{-1} = J,
  R^{ij}_{ab} = q^{d_ij - d_ij'} d_ia d_jb
                + u(i-a)(q - q^{-1})(d_ja d_ib - eps c_ji c_ab),

with u(x) = 1 for x >= 1 else 0 and the sign eps fixed to +1 (validated
a posteriori by qybe_check and by every derived straightening identity
being an ideal member).
"""

from __future__ import annotations

from fractions import Fraction


class RMatrix:
    """Sparse table entry[(i, j, a, b)] = R^{ij}_{ab}, 1-based indices."""

    __slots__ = ("ctx", "n", "entries", "rho2", "by_cols")

    def __init__(self, ctx, n, entries, rho2):
        self.ctx = ctx
        self.n = n
        self.entries = entries
        self.rho2 = rho2  # 2*rho_i, integers
        by_cols = {}
        for (i, j, a, b), c in entries.items():
            by_cols.setdefault((a, b), []).append((i, j, c))
        self.by_cols = by_cols

    def prime(self, k):
        return self.n + 1 - k

    def coeff(self, i, j, a, b):
        v = self.entries.get((i, j, a, b))
        return v if v is not None else self.ctx.zero()

    def c_entry(self, i, j):
        """J-matrix entry c_ij = delta_{i,j'} q^{-rho_i}."""
        if j != self.prime(i):
            return self.ctx.zero()
        return self.ctx.qpow_half(-self.rho2[i])


def so_rmatrix(ctx, n, eps=1):
    """Build the SO_n R-matrix (n >= 4, orthogonal series)."""
    if n < 4:
        raise ValueError("orthogonal R-matrix needs n >= 4")
    rho2 = {}
    for i in range(1, n + 1):
        ip = n + 1 - i
        if i < ip:
            rho2[i] = n - 2 * i
        elif i == ip:
            rho2[i] = 0
        else:
            rho2[i] = -(n - 2 * ip)
    lam = ctx.q() - ctx.q().inv()
    eps_s = ctx.from_int(eps)

    def cmat(i, j):
        if j != n + 1 - i:
            return None
        return ctx.qpow_half(-rho2[i])

    entries = {}

    def put(key, val):
        if not val:
            return
        s = entries.get(key)
        s = val if s is None else s + val
        if s:
            entries[key] = s
        else:
            entries.pop(key, None)

    for i in range(1, n + 1):
        for j in range(1, n + 1):
            # diagonal part: a=i, b=j
            d = (1 if i == j else 0) - (1 if i == n + 1 - j else 0)
            put((i, j, i, j), ctx.qpow(d))
            # u(i-a) * lam * delta_ja delta_ib term: a=j, b=i, needs i>a=j
            if i > j:
                put((i, j, j, i), lam)
            # -u(i-a) * lam * eps * c_ji c_ab term: c_ji nonzero iff i=j'
            cji = cmat(j, i)
            if cji is not None:
                for a in range(1, i):  # u(i-a)=1
                    b = n + 1 - a
                    cab = cmat(a, b)
                    put((i, j, a, b), -(lam * eps_s * cji * cab))
    return RMatrix(ctx, n, entries, rho2)


def _apply(R, vec, p1, p2):
    """Apply R to tensor factors p1 < p2 of a sparse vector over basis
    (i1, ..., im)."""
    out = {}
    for idx, c in vec.items():
        a, b = idx[p1], idx[p2]
        for (i, j, coeff) in R.by_cols.get((a, b), ()):
            nidx = list(idx)
            nidx[p1], nidx[p2] = i, j
            key = tuple(nidx)
            v = c * coeff
            s = out.get(key)
            s = v if s is None else s + v
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def qybe_check(R):
    """Verify R12 R13 R23 = R23 R13 R12 on the full n^3 basis.  Returns
    (ok, witness) where witness is the first failing basis triple."""
    n = R.n
    one = R.ctx.one()
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            for c in range(1, n + 1):
                v = {(a, b, c): one}
                lhs = _apply(R, _apply(R, _apply(R, v, 1, 2), 0, 2), 0, 1)
                rhs = _apply(R, _apply(R, _apply(R, v, 0, 1), 0, 2), 1, 2)
                if lhs != rhs:
                    return False, (a, b, c)
    return True, None
