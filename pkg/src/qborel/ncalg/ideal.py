"""Exact linear algebra over the relation ideal.

Two jobs:

* derive_rules — reduced row echelon form of the degree <= 2 slice of the
  ideal, producing one rewrite rule per two-letter leading word.  The
  straightening systems are *derived* from the defining relations this
  way, never transcribed from worked identities.

* IdealOracle — ground-truth degree-bounded ideal membership: the span of
  {u * r * v : r relation, total degree <= bound} is echelonized once and
  membership is decided by exact reduction.  Sound always; complete up to
  the bound for quadratic relation sets.
"""

from __future__ import annotations

from itertools import product

from qborel.ncalg.poly import NcPoly, word_key
from qborel.ncalg.rules import RuleSystem


def _reduce_row(pivots, row, key=word_key):
    """Fully reduce a dict row against pivot rows (lead coeff 1)."""
    while True:
        target = None
        for w in row:
            if w in pivots and (target is None or key(w) > key(target)):
                target = w
        if target is None:
            return row
        c = row[target]
        for w, v in pivots[target].items():
            s = row.get(w)
            s = -(c * v) if s is None else s - c * v
            if s:
                row[w] = s
            else:
                row.pop(w, None)


def _insert_row(pivots, row, key=word_key):
    """Reduce row; if nonzero, normalize and install as a pivot.  Returns
    the new pivot word or None."""
    row = _reduce_row(pivots, dict(row), key)
    if not row:
        return None
    lead = max(row, key=key)
    c = row[lead]
    normal = {w: v / c for w, v in row.items()}
    # back-substitute into existing pivot tails
    for lw, prow in pivots.items():
        if lead in prow:
            f = prow[lead]
            for w, v in normal.items():
                s = prow.get(w)
                s = -(f * v) if s is None else s - f * v
                if s:
                    prow[w] = s
                else:
                    prow.pop(w, None)
    pivots[lead] = normal
    return lead


def derive_rules(alg, relations, max_lead_len=2):
    """Echelonize the given relations (each an NcPoly or term dict of
    degree <= 2) and return the RuleSystem lhs -> lower terms.

    Raises if any reduced row has a leading word shorter than 2 letters
    (which would collapse a generator — callers eliminate such generators
    before derivation) or longer than max_lead_len.  A one-letter leading
    word is allowed when that generator carries weight > 1: the rule then
    *solves* for a redundant generator rather than collapsing one.
    """
    key = alg.word_key
    pivots = {}
    for r in relations:
        terms = r.terms if isinstance(r, NcPoly) else r
        _insert_row(pivots, terms, key)
    system = RuleSystem(alg)
    for lead, row in sorted(pivots.items(), key=lambda t: key(t[0])):
        if len(lead) < 2 and not (lead and alg.weights[lead[0]] > 1):
            raise ValueError("relation collapses %s — eliminate the "
                             "generator first" % alg.word_str(lead))
        if len(lead) > max_lead_len:
            raise ValueError("non-quadratic leading word %s"
                             % alg.word_str(lead))
        rhs = {w: -c for w, c in row.items() if w != lead}
        system.add_rule(lead, rhs)
    return system


class IdealOracle:
    """Degree-bounded membership oracle for the two-sided ideal generated
    by a finite relation set."""

    def __init__(self, alg, relations, bound):
        self.alg = alg
        self.bound = bound
        self.key = alg.word_key
        self.pivots = {}
        alphabet = range(alg.ngens)
        self.dimension = 0
        for r in relations:
            terms = r.terms if isinstance(r, NcPoly) else r
            if not terms:
                continue
            deg = max(len(w) for w in terms)
            pad = bound - deg
            if pad < 0:
                raise ValueError("relation exceeds the degree bound")
            for lu in range(pad + 1):
                for lv in range(pad - lu + 1):
                    for u in product(alphabet, repeat=lu):
                        for v in product(alphabet, repeat=lv):
                            row = {u + w + v: c for w, c in terms.items()}
                            if _insert_row(self.pivots, row, self.key):
                                self.dimension += 1

    def contains(self, p):
        terms = p.terms if isinstance(p, NcPoly) else p
        for w in terms:
            if len(w) > self.bound:
                raise ValueError("element exceeds the degree bound")
        return not _reduce_row(self.pivots, dict(terms), self.key)
