"""Words, term order, and sparse noncommutative polynomials.

A word is a tuple of generator ids.  Generator ids are assigned in
registration order, which fixes the precedence: callers register
generators by (row, col) with each formal inverse immediately after its
generator.  The term order is degree first, then lexicographic on ids;
rules always rewrite larger words into combinations of strictly smaller
ones, so rewriting terminates.
"""

from __future__ import annotations

from fractions import Fraction

from qborel.qarith import CycloNum


def word_key(word):
    return (len(word), word)


class Algebra:
    """Generator table over a fixed cyclotomic context."""

    def __init__(self, ctx):
        self.ctx = ctx
        self.names = []
        self.index = {}
        self.weights = []
        self.inverse = {}  # gid <-> gid of its formal inverse

    def add_generator(self, name, inverse_of=None, weight=1):
        """weight: positive integer term-order weight.  Generators that
        are redundant (expressible through the others) get a large weight
        so that orientation *solves* for them; everything else weighs 1,
        which makes the order plain degree-then-lex."""
        if name in self.index:
            raise ValueError("duplicate generator %r" % (name,))
        if weight < 1:
            raise ValueError("weight must be positive")
        gid = len(self.names)
        self.names.append(name)
        self.index[name] = gid
        self.weights.append(weight)
        if inverse_of is not None:
            other = self.index[inverse_of]
            if other in self.inverse:
                raise ValueError("%r already has an inverse" % (inverse_of,))
            self.inverse[other] = gid
            self.inverse[gid] = other
        return gid

    def word_key(self, word):
        """Weighted degree, then length, then lex on ids.  Additive over
        concatenation and well-founded, so it is an admissible rewrite
        order; with all weights 1 it coincides with degree-then-lex."""
        return (sum(self.weights[g] for g in word), len(word), word)

    @property
    def ngens(self):
        return len(self.names)

    def gen(self, name):
        return NcPoly(self, {(self.index[name],): self.ctx.one()})

    def gen_word(self, *names):
        return tuple(self.index[n] for n in names)

    def one(self):
        return NcPoly(self, {(): self.ctx.one()})

    def zero(self):
        return NcPoly(self, {})

    def poly(self, terms):
        return NcPoly(self, {w: c for w, c in terms.items() if c})

    def coerce_scalar(self, c):
        if isinstance(c, CycloNum):
            return c
        if isinstance(c, int):
            return self.ctx.from_int(c)
        if isinstance(c, Fraction):
            return self.ctx.from_fraction(c)
        raise TypeError("cannot coerce %r" % (c,))

    def name_str(self, gid):
        name = self.names[gid]
        if isinstance(name, tuple):
            base = "".join(str(x) for x in name[1:])
            if name[0].endswith("~"):
                return "%s%s^-1" % (name[0][:-1], base)
            return "%s%s" % (name[0], base)
        return str(name)

    def word_str(self, word):
        if not word:
            return "1"
        return ".".join(self.name_str(g) for g in word)


class NcPoly:
    """Sparse map word -> CycloNum; zero coefficients never stored."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms):
        self.alg = alg
        self.terms = terms

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((len(w) for w in self.terms), default=-1)

    def copy(self):
        return NcPoly(self.alg, dict(self.terms))

    def items_sorted(self):
        return sorted(self.terms.items(), key=lambda t: word_key(t[0]))

    def leading(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        w = max(self.terms, key=self.alg.word_key)
        return w, self.terms[w]

    def coeff(self, word):
        return self.terms.get(word, self.alg.ctx.zero())

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return NcPoly(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return NcPoly(self.alg, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def _coerce(self, other):
        if isinstance(other, NcPoly):
            return other
        c = self.alg.coerce_scalar(other)
        return NcPoly(self.alg, {(): c} if c else {})

    def __mul__(self, other):
        if not isinstance(other, NcPoly):
            c = self.alg.coerce_scalar(other)
            if not c:
                return NcPoly(self.alg, {})
            return NcPoly(self.alg, {w: v * c for w, v in self.terms.items()})
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                s = out.get(w)
                s = c if s is None else s + c
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        return NcPoly(self.alg, out)

    def __rmul__(self, other):
        # scalars commute with everything
        return self * other

    def __eq__(self, other):
        if isinstance(other, NcPoly):
            return self.alg is other.alg and self.terms == other.terms
        return (self - other).is_zero()

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for w, c in self.items_sorted():
            cs = str(c)
            ws = self.alg.word_str(w)
            if w == ():
                bits.append(cs)
            elif cs == "1":
                bits.append(ws)
            else:
                bits.append("(%s)*%s" % (cs, ws))
        return " + ".join(bits)

    __repr__ = __str__


class TensorPoly:
    """Element of the tensor square: sparse map (word, word) -> CycloNum.
    Multiplication is factorwise concatenation; straightening is applied
    factorwise by the rule system (never across the tensor sign)."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms):
        self.alg = alg
        self.terms = terms

    @classmethod
    def of(cls, left, right):
        out = {}
        for w1, c1 in left.terms.items():
            for w2, c2 in right.terms.items():
                c = c1 * c2
                if c:
                    out[(w1, w2)] = c
        return cls(left.alg, out)

    def is_zero(self):
        return not self.terms

    def items_sorted(self):
        return sorted(self.terms.items(),
                      key=lambda t: (word_key(t[0][0]), word_key(t[0][1])))

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return TensorPoly(self.alg, out)

    def __neg__(self):
        return TensorPoly(self.alg, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TensorPoly):
            c = self.alg.coerce_scalar(other)
            if not c:
                return TensorPoly(self.alg, {})
            return TensorPoly(self.alg,
                              {k: v * c for k, v in self.terms.items()})
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                c = c1 * c2
                s = out.get(k)
                s = c if s is None else s + c
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return TensorPoly(self.alg, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, TensorPoly) and self.terms == other.terms

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for (w1, w2), c in self.items_sorted():
            cs = str(c)
            body = "%s (x) %s" % (self.alg.word_str(w1), self.alg.word_str(w2))
            bits.append(body if cs == "1" else "(%s)*%s" % (cs, body))
        return " + ".join(bits)

    __repr__ = __str__
