"""Root systems of types A/B/D, lattice data Q <= M <= P, and Cartan data.

Conventions.  The Cartan matrix is a_ij = (alpha_i, alpha_j)/d_i with
symmetrizer d_i = (alpha_i, alpha_i)/2, so D*C is symmetric.  Positive
roots carry two-index labels (i, j):

  A (ambient n = theta+1):  1 <= i < j <= n,    alpha_(ij) = a_i+...+a_{j-1}
  B (ambient n = 2theta+1): 1 <= i <= theta, i < j <= i'-1, j' = 2theta+2-j
  D (ambient n = 2theta):   1 <= i < theta, i < j <= i'-1,  j' = 2theta+1-j

with the usual closed-form expansions over simple roots (for B, labels
with j > theta+1 are the "long" roots alpha_i+...+a_{j0-1}+2a_{j0}+...+
2a_theta, j0 = j'; for D the fork node theta attaches to node theta-2).

Braidings are restricted to *power braidings* q_ij = q^{e_ij}: every
value (including the chosen a^2-th roots needed for the multiparameter
matrix on a general lattice M) is then an exact element of Q(q) and all
character identities are decided by exact field arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

from qborel.qarith import CycloCtx, CycloNum


# ---------------------------------------------------------------------------
# small exact matrix helpers
# ---------------------------------------------------------------------------

def mat_mul(A, B):
    n, m, p = len(A), len(B), len(B[0])
    return [[sum(A[i][k] * B[k][j] for k in range(m)) for j in range(p)]
            for i in range(n)]


def mat_det(A):
    n = len(A)
    M = [[Fraction(x) for x in row] for row in A]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det *= M[c][c]
        inv = 1 / M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] * inv
            if f:
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return det


def mat_inv(A):
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(A)]
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c]), None)
        if piv is None:
            raise ValueError("singular matrix")
        M[c], M[piv] = M[piv], M[c]
        inv = 1 / M[c][c]
        M[c] = [x * inv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c]:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [row[n:] for row in M]


# ---------------------------------------------------------------------------
# root systems
# ---------------------------------------------------------------------------

class RootSystem:
    """Cartan matrix, symmetrizer and labelled positive roots."""

    __slots__ = ("kind", "theta", "n", "cartan", "sym", "labels", "coeffs")

    def __init__(self, kind, theta):
        if kind not in ("A", "B", "D"):
            raise ValueError("kind must be one of A, B, D")
        if theta < 1 or (kind == "B" and theta < 2) or (kind == "D" and theta < 2):
            raise ValueError("rank %d invalid for type %s" % (theta, kind))
        self.kind = kind
        self.theta = theta
        self.n = {"A": theta + 1, "B": 2 * theta + 1, "D": 2 * theta}[kind]
        self.sym = self._symmetrizer()
        self.cartan = self._cartan_matrix()
        self.labels = self._root_labels()
        self.coeffs = {lab: self._root_coeffs(lab) for lab in self.labels}
        expected = {"A": theta * (theta + 1) // 2, "B": theta * theta,
                    "D": theta * (theta - 1)}[kind]
        assert len(self.labels) == expected

    # -- structure ----------------------------------------------------------
    def _symmetrizer(self):
        t = self.theta
        if self.kind == "B":
            return tuple([2] * (t - 1) + [1])
        return (1,) * t

    def _inner(self, i, j):
        """(alpha_i, alpha_j), normalized so short roots have square 2."""
        t, k = self.theta, self.kind
        if i == j:
            return 2 * self.sym[i - 1]
        if i > j:
            i, j = j, i
        if k == "A":
            return -1 if j == i + 1 else 0
        if k == "B":
            return -2 if j == i + 1 else 0
        # D: chain 1..theta-1, fork node theta attached to theta-2
        if j < t:
            return -1 if j == i + 1 else 0
        return -1 if i == t - 2 else 0  # j == theta

    def _cartan_matrix(self):
        t = self.theta
        return tuple(tuple(self._inner(i, j) // self.sym[i - 1]
                           for j in range(1, t + 1)) for i in range(1, t + 1))

    def prime(self, j):
        """The index pairing j -> j' of the B/D ambient space."""
        if self.kind == "B":
            return 2 * self.theta + 2 - j
        if self.kind == "D":
            return 2 * self.theta + 1 - j
        raise ValueError("prime index undefined for type A")

    def _root_labels(self):
        t, k = self.theta, self.kind
        if k == "A":
            return [(i, j) for i in range(1, t + 1) for j in range(i + 1, t + 2)]
        if k == "B":
            return [(i, j) for i in range(1, t + 1)
                    for j in range(i + 1, self.prime(i))]
        return [(i, j) for i in range(1, t)
                for j in range(i + 1, self.prime(i))]

    def _root_coeffs(self, lab):
        i, j = lab
        t, k = self.theta, self.kind
        c = [0] * t
        if k == "A" or j <= t:
            for m in range(i, j):
                c[m - 1] = 1
            return tuple(c)
        if k == "B":
            if j == t + 1:
                for m in range(i, t + 1):
                    c[m - 1] = 1
                return tuple(c)
            j0 = self.prime(j)  # long root, j0 <= theta
            for m in range(i, j0):
                c[m - 1] = 1
            for m in range(j0, t + 1):
                c[m - 1] = 2
            return tuple(c)
        # D
        if j == t + 1:
            for m in range(i, t - 1):
                c[m - 1] = 1
            c[t - 1] = 1
            return tuple(c)
        j0 = self.prime(j)  # i < j0 <= theta-1
        for m in range(i, j0):
            c[m - 1] = 1
        for m in range(j0, t - 1):
            c[m - 1] = 2
        c[t - 2] += 1
        c[t - 1] += 1
        return tuple(c)

    def height(self, lab):
        return sum(self.coeffs[lab])

    def label_str(self, lab):
        i, j = lab
        if self.kind != "A" and j > self.theta + 1:
            return "(%d,%d')" % (i, self.prime(j))
        return "(%d,%d)" % (i, j)

    def __repr__(self):
        return "RootSystem(%s, %d)" % (self.kind, self.theta)


def root_system(kind, theta):
    return RootSystem(kind, theta)


# ---------------------------------------------------------------------------
# lattice data
# ---------------------------------------------------------------------------

class LatticeData:
    """A lattice Q <= M <= P with alpha_i = sum_j (C_M)_{ji} m_j and
    m_j = sum_k (Cbar_M)_{kj} omega_k, so that Cbar_M * C_M = C."""

    __slots__ = ("rs", "choice", "C_M", "Cbar_M", "pairing", "weight_coords")

    def __init__(self, rs, choice):
        if choice not in ("root-lattice", "weight-lattice"):
            raise ValueError("unknown lattice choice %r" % choice)
        if choice == "weight-lattice" and rs.kind != "A":
            raise ValueError("weight lattice only supported for type A")
        self.rs = rs
        self.choice = choice
        t = rs.theta
        if choice == "weight-lattice":
            # M = P: alpha_i = sum_j a_ji omega_j
            self.C_M = tuple(tuple(rs.cartan[j][i] for i in range(t))
                             for j in range(t))
            self.Cbar_M = tuple(tuple(int(i == j) for j in range(t))
                                for i in range(t))
            # (m_i, alpha_j) = (omega_i, alpha_j) = delta_ij d_j
            self.pairing = tuple(tuple(rs.sym[j] * int(i == j)
                                       for j in range(t)) for i in range(t))
            n = rs.n
            self.weight_coords = tuple(
                tuple(Fraction(int(j <= i)) - Fraction(i, n)
                      for j in range(1, n + 1)) for i in range(1, t + 1))
        else:
            # M = Q: m_i = alpha_i
            self.C_M = tuple(tuple(int(i == j) for j in range(t))
                             for i in range(t))
            self.Cbar_M = rs.cartan
            self.pairing = tuple(tuple(rs.sym[i] * rs.cartan[i][j]
                                       for j in range(t)) for i in range(t))
            self.weight_coords = None
        C = mat_mul([list(r) for r in self.Cbar_M], [list(r) for r in self.C_M])
        assert all(C[i][j] == rs.cartan[i][j] for i in range(t) for j in range(t))

    @property
    def a_M(self):
        return abs(mat_det(self.C_M))

    def __repr__(self):
        return "LatticeData(%s, %s)" % (self.rs, self.choice)


def lattice_data(kind, theta, choice):
    return LatticeData(root_system(kind, theta), choice)


def default_lattice(rs):
    """The lattice used throughout: weight lattice for A, root lattice
    for B/D."""
    return LatticeData(rs, "weight-lattice" if rs.kind == "A" else "root-lattice")


# ---------------------------------------------------------------------------
# Cartan datum
# ---------------------------------------------------------------------------

class DatumError(ValueError):
    pass


def dj_exponents(rs, ctx):
    """Exponent matrix e_ij with q_ij = q^{e_ij} for the Drinfeld-Jimbo
    braiding.  For type B the quantized enveloping algebra runs over the
    square root of the function-algebra parameter, so e_ij picks up the
    half-exponent."""
    t = rs.theta
    base = ctx.half_exp if rs.kind == "B" else 1
    return tuple(tuple((base * rs.sym[i] * rs.cartan[i][j]) % ctx.N
                       for j in range(t)) for i in range(t))


class CartanDatum:
    """Group Gamma = prod Z/(l_i N), distinguished generators g_{m_i},
    characters chi_j with chi_j(g_i) = q_ij, for a power braiding
    q_ij = q^{e_ij}."""

    __slots__ = ("rs", "lattice", "ctx", "orders", "ell", "qexp", "rootexp",
                 "qMexp", "g_vectors")

    def __init__(self, rs, ctx, orders, qexp, lattice=None, rootexp=None):
        self.rs = rs
        self.ctx = ctx
        self.lattice = lattice if lattice is not None else default_lattice(rs)
        t = rs.theta
        N = ctx.N
        if len(orders) != t:
            raise DatumError("need %d group orders" % t)
        for o in orders:
            if o % N != 0:
                raise DatumError("group order %d not divisible by N=%d" % (o, N))
        self.orders = tuple(orders)
        self.ell = tuple(o // N for o in orders)
        self.qexp = tuple(tuple(e % N for e in row) for row in qexp)
        # Cartan compatibility: q_ij q_ji = q_ii^{a_ij}
        for i in range(t):
            for j in range(t):
                lhs = (self.qexp[i][j] + self.qexp[j][i]) % N
                rhs = (self.qexp[i][i] * rs.cartan[i][j]) % N
                if lhs != rhs:
                    raise DatumError(
                        "Cartan braiding relation fails at (i,j)=(%d,%d): "
                        "q_ij*q_ji = q^%d but q_ii^a_ij = q^%d"
                        % (i + 1, j + 1, lhs, rhs))
        # each q_ii must have order exactly N
        from math import gcd
        for i in range(t):
            if gcd(self.qexp[i][i], N) != 1:
                raise DatumError("ord(q_%d%d) != N" % (i + 1, i + 1))
        # chosen a^2-th roots q_ij^{1/a^2} = q^{rootexp_ij}
        a = int(abs(mat_det(rs.cartan)))
        if rootexp is None:
            if gcd(a, N) != 1:
                raise DatumError("default root choice needs gcd(a,N)=1")
            inv_a2 = pow(a * a, -1, N)
            rootexp = tuple(tuple((e * inv_a2) % N for e in row)
                            for row in self.qexp)
        self.rootexp = tuple(tuple(r % N for r in row) for row in rootexp)
        for i in range(t):
            for j in range(t):
                if (self.rootexp[i][j] * a * a) % N != self.qexp[i][j]:
                    raise DatumError("supplied root is not an a^2-th root "
                                     "of q_%d%d" % (i + 1, j + 1))
        # compatibility q_ij^{1/a} q_ji^{1/a} = q_ii^{a_ij/a}
        for i in range(t):
            for j in range(t):
                lhs = (a * (self.rootexp[i][j] + self.rootexp[j][i])) % N
                rhs = (a * self.rootexp[i][i] * rs.cartan[i][j]) % N
                if lhs != rhs:
                    raise DatumError("root family incompatible at (%d,%d)"
                                     % (i + 1, j + 1))
        self.qMexp = self._multiparam_exponents()
        # g_i = g(alpha_i): exponent vectors over the g_{m_k}
        CM = self.lattice.C_M
        self.g_vectors = tuple(tuple(CM[k][i] for k in range(t))
                               for i in range(t))

    # -- multiparameter matrix ---------------------------------------------
    def _multiparam_exponents(self):
        """Exponents of q_ij^M = prod_k q_kj^{atilde_ki} via the chosen
        a^2-th roots."""
        rs, N = self.rs, self.ctx.N
        t = rs.theta
        a = int(abs(mat_det(rs.cartan)))
        inv = mat_inv([list(r) for r in self.lattice.C_M])  # atilde
        out = []
        for i in range(t):
            row = []
            for j in range(t):
                e = 0
                for k in range(t):
                    frac = inv[k][i] * a * a  # integer (a_M | a)
                    assert frac.denominator == 1
                    e += self.rootexp[k][j] * int(frac)
                row.append(e % N)
            out.append(tuple(row))
        return tuple(out)

    # -- evaluations ----------------------------------------------------------
    def q_ij(self, i, j):
        return self.ctx.qpow(self.qexp[i - 1][j - 1])

    def qM_ij(self, i, j):
        return self.ctx.qpow(self.qMexp[i - 1][j - 1])

    def chi_on_gm(self, j, i):
        """chi_j(g_{m_i}) as a CycloNum."""
        return self.qM_ij(i, j)

    def chi_on_g(self, j, i):
        """chi_j(g_i) — must equal q_ij."""
        t = self.rs.theta
        e = sum(self.qMexp[k][j - 1] * self.g_vectors[i - 1][k]
                for k in range(t))
        return self.ctx.qpow(e)

    def g_alpha(self, coeffs):
        """Exponent vector of g_alpha = prod_i g_i^{c_i} over the g_{m_k}."""
        t = self.rs.theta
        return tuple(sum(coeffs[i] * self.g_vectors[i][k] for i in range(t))
                     for k in range(t))

    def g_alpha_N_trivial(self, coeffs):
        """Whether g_alpha^N = 1 in Gamma = prod Z/(l_k N)."""
        vec = self.g_alpha(coeffs)
        return all(v % lk == 0 for v, lk in zip(vec, self.ell))

    def chi_alpha_N_trivial(self, coeffs):
        """Whether chi_alpha^N = epsilon, evaluated on every generator."""
        t = self.rs.theta
        N = self.ctx.N
        for i in range(t):
            e = sum(coeffs[j] * self.qMexp[i][j] for j in range(t))
            if (N * e) % N != 0:  # always 0 for power braidings; kept exact
                return False
        return True

    def to_document(self):
        return {
            "kind": self.rs.kind,
            "rank": self.rs.theta,
            "N": self.ctx.N,
            "orders": list(self.orders),
            "lattice": self.lattice.choice,
            "braiding": [list(r) for r in self.qexp],
            "roots_a2": [list(r) for r in self.rootexp],
        }

    @classmethod
    def from_document(cls, doc, ctx=None):
        rs = root_system(doc["kind"], doc["rank"])
        if ctx is None:
            ctx = CycloCtx(doc["N"])
        lat = LatticeData(rs, doc.get("lattice") or
                          ("weight-lattice" if rs.kind == "A" else "root-lattice"))
        qexp = doc["braiding"]
        if qexp == "DJ":
            qexp = dj_exponents(rs, ctx)
        rootexp = doc.get("roots_a2")
        return cls(rs, ctx, doc["orders"], qexp, lattice=lat, rootexp=rootexp)


def datum_build(rs, ctx, orders, q_matrix="DJ", lattice=None, rootexp=None):
    """Build and validate a Cartan datum.  q_matrix is either "DJ", an
    integer exponent matrix (q_ij = q^{e_ij}), or a matrix of CycloNum
    values that are powers of q."""
    if q_matrix == "DJ":
        qexp = dj_exponents(rs, ctx)
    elif q_matrix and isinstance(q_matrix[0][0], CycloNum):
        qexp = [[_discrete_log(ctx, v) for v in row] for row in q_matrix]
    else:
        qexp = q_matrix
    return CartanDatum(rs, ctx, orders, qexp, lattice=lattice, rootexp=rootexp)


def _discrete_log(ctx, value):
    acc = ctx.one()
    q = ctx.q()
    for k in range(ctx.N):
        if acc == value:
            return k
        acc = acc * q
    raise DatumError("braiding entry %r is not a power of q" % (value,))


def multiparam_qM(datum):
    """The matrix q_ij^M as CycloNum values."""
    t = datum.rs.theta
    return [[datum.qM_ij(i, j) for j in range(1, t + 1)]
            for i in range(1, t + 1)]


def lemma_chi_check(datum):
    """Exact check of chi_j(g_{m_i}) * chi_{m_i}(g_j) = q_jj^{(alpha_j,m_i)/d_j}
    for all i, j; returns (ok, failures)."""
    rs, ctx = datum.rs, datum.ctx
    t = rs.theta
    a = int(abs(mat_det(rs.cartan)))
    inv = mat_inv([list(r) for r in datum.lattice.C_M])
    failures = []
    for i in range(1, t + 1):
        for j in range(1, t + 1):
            lhs = datum.chi_on_gm(j, i)
            # chi_{m_i}(g_j) = prod_k chi_k^{atilde_ki}(g_j)
            #               = prod_k prod_l (q^M_{lk})^{atilde_ki (C_M)_{lj}}
            e = 0
            for k in range(t):
                for l in range(t):
                    frac = inv[k][i - 1] * datum.lattice.C_M[l][j - 1]
                    term = frac * a * a
                    assert term.denominator == 1
                    # exponent on the chosen a^2-th root of q^M_{lk};
                    # q^M itself is a power of q, use its exponent root
                    e += int(term) * _root_of_exponent(datum, l, k, a)
            lhs = lhs * ctx.qpow(e)
            rhs_exp = Fraction(datum.lattice.pairing[i - 1][j - 1],
                               rs.sym[j - 1])
            assert rhs_exp.denominator == 1
            rhs = datum.q_ij(j, j) ** int(rhs_exp)
            if lhs != rhs:
                failures.append((i, j, str(lhs), str(rhs)))
    return (not failures, failures)


def _root_of_exponent(datum, l, k, a):
    """Exponent r with (q^M_{lk})^{1/a^2} = q^r, induced by the chosen
    root family of the base braiding."""
    t = datum.rs.theta
    inv = mat_inv([list(r) for r in datum.lattice.C_M])
    e = 0
    for m in range(t):
        frac = inv[m][l] * a * a
        assert frac.denominator == 1
        e += int(frac) * datum.rootexp[m][k]
    # e is a^2 * (exponent of the root of q^M); divide in Z/N
    invq = pow(a * a, -1, datum.ctx.N)
    return (e * invq) % datum.ctx.N


# ---------------------------------------------------------------------------
# root-vector parameters
# ---------------------------------------------------------------------------

class MuFamily:
    """mu_alpha per positive-root label; value None means a formal symbol."""

    __slots__ = ("rs", "values", "forced_zero")

    def __init__(self, rs, values=None):
        self.rs = rs
        if values is None:
            values = {lab: None for lab in rs.labels}
        unknown = set(values) - set(rs.labels)
        if unknown:
            raise ValueError("mu indexed by non-roots: %s" % sorted(unknown))
        self.values = {lab: values.get(lab) for lab in rs.labels}
        self.forced_zero = frozenset()

    @classmethod
    def symbolic(cls, rs):
        return cls(rs)

    def is_zero(self, lab):
        v = self.values[lab]
        return v is not None and (v == 0 or (hasattr(v, "is_zero") and v.is_zero()))


def mu_validate(datum, mu):
    """Zero the inadmissible entries: mu_alpha = 0 whenever g_alpha^N = 1
    or chi_alpha^N != epsilon.  Returns a new MuFamily with the mask."""
    rs = datum.rs
    out = MuFamily(rs, dict(mu.values))
    forced = set()
    for lab in rs.labels:
        coeffs = rs.coeffs[lab]
        if datum.g_alpha_N_trivial(coeffs) or not datum.chi_alpha_N_trivial(coeffs):
            forced.add(lab)
            out.values[lab] = 0
    out.forced_zero = frozenset(forced)
    return out
