"""Exact arithmetic in the cyclotomic field Q(q) = Q[q]/Phi_N(q).

q is a primitive N-th root of unity of odd order N.  Elements are stored
as integer coefficient vectors of length phi(N) over a common positive
integer denominator, always reduced mod Phi_N and gcd-normalized, so that
equality is literal tuple equality.  Everything here is exact; there is
no floating-point mode.

Half-integer exponents q^{k/2} are interpreted through the exponent
(N+1)/2: since N is odd, q^{(N+1)/2} is the canonical square root of q
and satisfies (q^{1/2})^N = 1.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


# ---------------------------------------------------------------------------
# integer polynomial helpers (dense lists, lowest degree first)
# ---------------------------------------------------------------------------

def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _poly_divexact(num, den):
    """Exact division of integer polynomials (den monic up to sign)."""
    num = list(num)
    dd = len(den) - 1
    while den[dd] == 0:
        dd -= 1
    lead = den[dd]
    q = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        if num[i] == 0:
            continue
        c, r = divmod(num[i], lead)
        if r:
            raise ArithmeticError("non-exact polynomial division")
        q[i - dd] = c
        for j in range(dd + 1):
            num[i - dd + j] -= c * den[j]
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return q


def _divisors(n):
    ds = [d for d in range(1, n + 1) if n % d == 0]
    return ds


def _mobius(n):
    mu, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            mu = -mu
        p += 1
    if n > 1:
        mu = -mu
    return mu


def cyclotomic_poly(n):
    """Coefficients of Phi_n(x), exact, via the Moebius product
    prod_{d|n} (x^{n/d} - 1)^{mu(d)}."""
    num = [1]
    den = [1]
    for d in _divisors(n):
        mu = _mobius(d)
        if mu == 0:
            continue
        factor = [-1] + [0] * (n // d - 1) + [1]
        if mu == 1:
            num = _poly_mul(num, factor)
        else:
            den = _poly_mul(den, factor)
    return _poly_divexact(num, den)


# ---------------------------------------------------------------------------
# field context
# ---------------------------------------------------------------------------

class CycloCtx:
    """Immutable context for Q(q) with q of fixed odd order N."""

    __slots__ = ("N", "deg", "phi", "half_exp", "_red", "_qpow",
                 "_zero", "_one")

    def __init__(self, N, unsafe=False):
        if N % 2 == 0 or N < 3:
            raise ValueError("order N must be odd and >= 3")
        if not unsafe and gcd(N, 210) != 1:
            raise ValueError(
                "order N must be coprime to 210 (pass unsafe=True to relax)")
        self.N = N
        self.phi = tuple(cyclotomic_poly(N))
        self.deg = len(self.phi) - 1
        self.half_exp = (N + 1) // 2
        d = self.deg
        # reduction rows: q^k as a length-d integer vector,
        # covering both products (k <= 2d-2) and raw powers (k <= N-1)
        top_k = max(2 * d - 2, N - 1)
        red = []
        row = [-c for c in self.phi[:d]]  # q^d (phi is monic)
        red.append(tuple(row))
        for _ in range(d + 1, top_k + 1):
            top = row[d - 1]
            row = [0] + row[:d - 1]
            if top:
                for j in range(d):
                    row[j] -= top * self.phi[j]
            red.append(tuple(row))
        self._red = tuple(red)
        # powers of q, reduced
        pw = []
        vec = [0] * d
        vec[0] = 1
        for _ in range(N):
            pw.append(tuple(vec))
            vec = self._reduce([0] + list(vec))
        self._qpow = tuple(pw)
        self._zero = CycloNum(self, (0,) * d, 1)
        self._one = CycloNum(self, pw[0], 1)

    def _reduce(self, vec):
        """Reduce an integer coefficient list (any length) mod Phi_N."""
        d = self.deg
        if len(vec) <= d:
            return list(vec) + [0] * (d - len(vec))
        vec = list(vec)
        if len(vec) - 1 >= d + len(self._red):
            # fold exponents mod N first (q^N = 1 in the field)
            folded = [0] * min(len(vec), self.N)
            for k, c in enumerate(vec):
                folded[k % self.N] += c
            vec = folded
        for k in range(len(vec) - 1, d - 1, -1):
            c = vec[k]
            if c:
                vec[k] = 0
                row = self._red[k - d]
                for j in range(d):
                    vec[j] += c * row[j]
        return vec[:d]

    # -- constructors -----------------------------------------------------
    def zero(self):
        return self._zero

    def one(self):
        return self._one

    def q(self):
        return self.qpow(1)

    def qpow(self, k):
        """q^k for any integer k (reduced mod N)."""
        return CycloNum(self, self._qpow[k % self.N], 1)

    def qpow_half(self, k):
        """q^{k/2}, via the half-exponent (N+1)/2 convention."""
        return self.qpow(k * self.half_exp)

    def from_int(self, n):
        vec = [0] * self.deg
        vec[0] = n
        return _make(self, vec, 1)

    def from_fraction(self, fr):
        fr = Fraction(fr)
        vec = [0] * self.deg
        vec[0] = fr.numerator
        return _make(self, vec, fr.denominator)

    def from_coeffs(self, fracs):
        """Element from a list of rational coefficients of 1, q, q^2, ..."""
        fracs = [Fraction(c) for c in fracs]
        den = 1
        for c in fracs:
            den = den * c.denominator // gcd(den, c.denominator)
        vec = self._reduce([int(c * den) for c in fracs])
        return _make(self, vec, den)

    def __repr__(self):
        return "CycloCtx(N=%d)" % self.N

    def __eq__(self, other):
        return isinstance(other, CycloCtx) and other.N == self.N

    def __hash__(self):
        return hash(("CycloCtx", self.N))


def _make(ctx, vec, den):
    """Build a normalized CycloNum from an integer vector and denominator."""
    if den < 0:
        den = -den
        vec = [-c for c in vec]
    g = den
    for c in vec:
        if c:
            g = gcd(g, c)
            if g == 1:
                break
    if g > 1:
        den //= g
        vec = [c // g for c in vec]
    return CycloNum(ctx, tuple(vec), den)


class CycloNum:
    """An element of Q(q), canonical representative mod Phi_N."""

    __slots__ = ("ctx", "num", "den")

    def __init__(self, ctx, num, den):
        self.ctx = ctx
        self.num = num
        self.den = den

    # -- predicates --------------------------------------------------------
    def is_zero(self):
        return not any(self.num)

    def __bool__(self):
        return any(self.num)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ctx.from_int(other)
        elif isinstance(other, Fraction):
            other = self.ctx.from_fraction(other)
        elif not isinstance(other, CycloNum):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- ring operations ---------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, CycloNum):
            return other
        if isinstance(other, int):
            return self.ctx.from_int(other)
        if isinstance(other, Fraction):
            return self.ctx.from_fraction(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self, o
        da, db = a.den, b.den
        if da == db:
            vec = [x + y for x, y in zip(a.num, b.num)]
            return _make(self.ctx, vec, da)
        vec = [x * db + y * da for x, y in zip(a.num, b.num)]
        return _make(self.ctx, vec, da * db)

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.ctx, tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prod = _poly_mul(self.num, o.num)
        vec = self.ctx._reduce(prod)
        return _make(self.ctx, vec, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def inv(self):
        """Multiplicative inverse via extended Euclid in Q[q] mod Phi_N."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(q)")
        phi = [Fraction(c) for c in self.ctx.phi]
        a = [Fraction(c, self.den) for c in self.num]
        # invariants: r0 = s0*a mod phi, r1 = s1*a mod phi
        r0, s0 = phi, [Fraction(0)]
        r1, s1 = a, [Fraction(1)]
        while True:
            r1 = _frac_trim(r1)
            if len(r1) == 1:
                break
            q, r = _frac_divmod(r0, r1)
            s = _frac_sub(s0, _frac_mul(q, s1))
            r0, s0, r1, s1 = r1, s1, r, s
        c = r1[0]  # nonzero constant gcd
        inv_coeffs = [x / c for x in s1]
        return self.ctx.from_coeffs(inv_coeffs)

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        result = self.ctx.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def multiplicative_order(self, bound=None):
        """Order of self in Q(q)^x, or None if it exceeds the bound."""
        if bound is None:
            bound = 2 * self.ctx.N
        acc = self
        one = self.ctx.one()
        for k in range(1, bound + 1):
            if acc == one:
                return k
            acc = acc * self
        return None

    # -- display -----------------------------------------------------------
    def coeff_fractions(self):
        return [Fraction(c, self.den) for c in self.num]

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.num):
            if not c:
                continue
            fr = Fraction(c, self.den)
            mag = abs(fr)
            if k == 0:
                body = str(mag)
            else:
                var = "q" if k == 1 else "q^%d" % k
                body = var if mag == 1 else "%s*%s" % (mag, var)
            if not parts:
                parts.append(body if fr > 0 else "-" + body)
            else:
                parts.append(("+ " if fr > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "CycloNum(%s)" % self


def _frac_trim(p):
    end = len(p)
    while end > 1 and p[end - 1] == 0:
        end -= 1
    return p[:end]


def _frac_sub(a, b):
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _frac_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _frac_divmod(a, b):
    a = list(a)
    b = _frac_trim(b)
    db = len(b) - 1
    q = [Fraction(0)] * max(1, len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        if a[i]:
            c = a[i] / b[db]
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    return q, _frac_trim(a)


# ---------------------------------------------------------------------------
# q-combinatorics
# ---------------------------------------------------------------------------
# Two variants of each q-number:
#   paren:   (n)_z = 1 + z + ... + z^{n-1}
#   bracket: [n]_z = z^{-(n-1)} + z^{-(n-3)} + ... + z^{n-1}
# linked by (n)_{z^2} = z^{n-1} [n]_z, and for binomials by
#   (n choose k)_{z^2} = z^{k(n-k)} [n over k]_z.

def qint(ctx, n, variant="paren", z=None):
    if n < 0:
        raise ValueError("n must be nonnegative")
    if z is None:
        z = ctx.q()
    if variant == "paren":
        acc = ctx.zero()
        pw = ctx.one()
        for _ in range(n):
            acc = acc + pw
            pw = pw * z
        return acc
    if variant == "bracket":
        return z.inv() ** (n - 1) * qint(ctx, n, "paren", z * z) if n else ctx.zero()
    raise ValueError("unknown variant %r" % variant)


def qfact(ctx, n, variant="paren", z=None):
    if n < 0:
        raise ValueError("n must be nonnegative")
    acc = ctx.one()
    for m in range(1, n + 1):
        acc = acc * qint(ctx, m, variant, z)
    return acc


def qbinom(ctx, n, k, variant="paren", z=None):
    """Gaussian binomial, exact at z (default z=q), via the Pascal
    recursion C(n,k)_z = C(n-1,k-1)_z + z^k C(n-1,k)_z (valid at any z,
    including roots of unity where the product formula would divide by 0).
    """
    if k < 0 or n < 0 or k > n:
        raise ValueError("need 0 <= k <= n")
    if z is None:
        z = ctx.q()
    if variant == "bracket":
        paren = qbinom(ctx, n, k, "paren", z * z)
        return z.inv() ** (k * (n - k)) * paren
    if variant != "paren":
        raise ValueError("unknown variant %r" % variant)
    row = [ctx.one()]
    for m in range(1, n + 1):
        zpow = ctx.one()
        new = []
        for j in range(0, min(m, k) + 1):
            left = row[j - 1] if 0 <= j - 1 < len(row) else ctx.zero()
            right = row[j] if j < len(row) else ctx.zero()
            if j > 0:
                zpow = zpow * z
            new.append(left + zpow * right)
        row = new
    return row[k]
