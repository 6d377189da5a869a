"""Straightening rule systems: normal forms, local confluence, bounded
completion."""

from __future__ import annotations

import os

from qborel.ncalg.poly import NcPoly, TensorPoly, word_key

if os.environ.get("QBOREL_PURE"):
    from qborel.ncalg import _kernel_py as _kernel
else:
    try:
        from qborel import _speedups as _kernel
    except ImportError:  # pragma: no cover - depends on build environment
        from qborel.ncalg import _kernel_py as _kernel

KERNEL = _kernel.KERNEL


class RewriteBudgetError(RuntimeError):
    pass


class RuleSystem:
    """A set of rewrite rules lhs -> rhs with every rhs word strictly
    smaller than the lhs in the degree-then-lex order."""

    def __init__(self, alg):
        self.alg = alg
        self.rules = {}     # lhs word -> tuple((word, coeff), ...)
        self.lengths = ()
        self._raw_cache = {}  # kernel-owned converted-rule cache

    def __len__(self):
        return len(self.rules)

    def add_rule(self, lhs, rhs_terms):
        """rhs_terms: dict word -> coeff.  Validates orientation."""
        lhs = tuple(lhs)
        key = self.alg.word_key
        lk = key(lhs)
        for w in rhs_terms:
            if key(w) >= lk:
                raise ValueError("rule not decreasing: %s -> %s" %
                                 (self.alg.word_str(lhs), self.alg.word_str(w)))
        if lhs in self.rules:
            raise ValueError("duplicate rule lhs %s" % self.alg.word_str(lhs))
        self.rules[lhs] = tuple(sorted(
            ((w, c) for w, c in rhs_terms.items() if c),
            key=lambda t: key(t[0]), reverse=True))
        self.lengths = tuple(sorted({len(w) for w in self.rules}))
        self._raw_cache.clear()

    def add_oriented(self, poly):
        """Orient a polynomial relation: largest word becomes the lhs."""
        if poly.is_zero():
            return None
        lead, c = poly.leading()
        rhs = {w: -(v / c) for w, v in poly.terms.items() if w != lead}
        self.add_rule(lead, rhs)
        return lead

    # -- normal forms -------------------------------------------------------
    def nf_terms(self, terms, budget=10 ** 9):
        try:
            return _kernel.nf_terms(self.rules, self.lengths,
                                    list(terms.items()), budget,
                                    self._raw_cache)
        except RuntimeError as e:
            raise RewriteBudgetError(str(e))

    def nf(self, p, budget=10 ** 9):
        return NcPoly(self.alg, self.nf_terms(p.terms, budget))

    def nf_word(self, word, budget=10 ** 9):
        one = self.alg.ctx.one()
        return NcPoly(self.alg,
                      self.nf_terms({tuple(word): one}, budget))

    def is_normal(self, word):
        for i in range(len(word)):
            for L in self.lengths:
                if word[i:i + L] in self.rules:
                    return False
        return True

    def mul_nf(self, a, b, budget=10 ** 9):
        """nf(a*b), folding the right factor in one letter at a time so
        every intermediate stays straightened — a one-shot nf of a long
        unstraightened product can blow up combinatorially."""
        a = self.nf(a, budget)
        out = NcPoly(self.alg, {})
        for w, c in b.terms.items():
            cur = a * c
            for letter in w:
                cur = NcPoly(self.alg, self.nf_terms(
                    {ww + (letter,): cc for ww, cc in cur.terms.items()},
                    budget))
            out = out + cur
        return out

    def power_nf(self, p, N, budget=10 ** 9):
        """nf(p^N) by incremental multiply-and-straighten."""
        out = self.alg.one()
        for _ in range(N):
            out = self.nf(out * p, budget)
        return out

    # -- tensor square ------------------------------------------------------
    def nf_tensor(self, tp, budget=10 ** 9, _cache=None):
        # factor words repeat across tensor keys, so nf is cached per word
        if _cache is None:
            _cache = {}
        one = self.alg.ctx.one()
        out = {}
        for (w1, w2), c in tp.terms.items():
            d1 = _cache.get(w1)
            if d1 is None:
                d1 = _cache[w1] = self.nf_terms({w1: one}, budget)
            d2 = _cache.get(w2)
            if d2 is None:
                d2 = _cache[w2] = self.nf_terms({w2: one}, budget)
            for u1, c1 in d1.items():
                cc1 = c * c1
                for u2, c2 in d2.items():
                    v = cc1 * c2
                    k = (u1, u2)
                    s = out.get(k)
                    s = v if s is None else s + v
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
        return TensorPoly(self.alg, out)

    def tensor_power_nf(self, tp, N, budget=10 ** 9, max_terms=None,
                        progress=None):
        terms = {((), ()): self.alg.ctx.one()}
        try:
            for step in range(N):
                terms = _kernel.tensor_step(self.rules, self.lengths,
                                            terms, tp.terms, budget,
                                            self._raw_cache)
                if max_terms is not None and len(terms) > max_terms:
                    raise RewriteBudgetError(
                        "tensor power exceeded %d terms at step %d"
                        % (max_terms, step + 1))
                if progress is not None:
                    progress(step + 1, len(terms))
        except RuntimeError as e:
            if isinstance(e, RewriteBudgetError):
                raise
            raise RewriteBudgetError(str(e))
        return TensorPoly(self.alg, terms)

    # -- confluence ---------------------------------------------------------
    def critical_pairs(self):
        """Yield (word, (pos1, lhs1), (pos2, lhs2)) for every overlap or
        containment of two rule lhs inside one word."""
        lhss = list(self.rules)
        for l1 in lhss:
            for l2 in lhss:
                # proper overlap: a suffix of l1 is a prefix of l2
                for k in range(1, min(len(l1), len(l2))):
                    if l1[len(l1) - k:] == l2[:k]:
                        yield (l1 + l2[k:], (0, l1), (len(l1) - k, l2))
                # containment: l2 strictly inside l1
                if len(l2) < len(l1):
                    for p in range(len(l1) - len(l2) + 1):
                        if l1[p:p + len(l2)] == l2:
                            yield (l1, (0, l1), (p, l2))

    def _apply_at(self, word, pos, lhs):
        head, tail = word[:pos], word[pos + len(lhs):]
        terms = {}
        for rw, rc in self.rules[lhs]:
            w = head + rw + tail
            s = terms.get(w)
            s = rc if s is None else s + rc
            if s:
                terms[w] = s
            else:
                terms.pop(w, None)
        return terms

    def check_local_confluence(self, budget=10 ** 7):
        """Return a list of unresolved critical pairs; empty == locally
        confluent (hence confluent, since rewriting terminates)."""
        failures = []
        seen = set()
        for word, (p1, l1), (p2, l2) in self.critical_pairs():
            key = (word, p1, l1, p2, l2)
            if key in seen:
                continue
            seen.add(key)
            n1 = self.nf_terms(self._apply_at(word, p1, l1), budget)
            n2 = self.nf_terms(self._apply_at(word, p2, l2), budget)
            if n1 != n2:
                diff = dict(n1)
                for w, c in n2.items():
                    s = diff.get(w)
                    s = -c if s is None else s - c
                    if s:
                        diff[w] = s
                    else:
                        diff.pop(w, None)
                failures.append({
                    "word": word,
                    "rule1": (p1, l1),
                    "rule2": (p2, l2),
                    "difference": diff,
                })
        return failures

    def complete(self, max_lhs_len=4, max_rounds=500, budget=10 ** 7):
        """Bounded Buchberger-style completion: orient unresolved
        critical-pair differences into new rules, smallest leading words
        first (so short rules are derived before any long consequence is
        considered).  Returns the list of added lhs words; raises if the
        length bound is hit or no progress is possible."""
        added = []
        for _ in range(max_rounds):
            failures = self.check_local_confluence(budget)
            if not failures:
                return added
            diffs = []
            for f in failures:
                d = self.nf(NcPoly(self.alg, dict(f["difference"])), budget)
                if not d.is_zero():
                    diffs.append(d)
            if not diffs:
                raise RuntimeError("completion stuck: unresolved pairs "
                                   "with no new rules")
            key = self.alg.word_key
            minwl = min(key(d.leading()[0])[:2] for d in diffs)
            progressed = False
            for d in sorted(diffs, key=lambda p: key(p.leading()[0])):
                d = self.nf(d, budget)  # earlier additions may reduce it
                if d.is_zero():
                    continue
                lead, _ = d.leading()
                if key(lead)[:2] > minwl or lead in self.rules:
                    continue
                if len(lead) > max_lhs_len:
                    raise RuntimeError(
                        "completion needs lhs of length %d > bound %d: %s"
                        % (len(lead), max_lhs_len, self.alg.word_str(lead)))
                self.add_oriented(d)
                added.append(lead)
                progressed = True
            if not progressed:
                raise RuntimeError("completion stuck: unresolved pairs "
                                   "with no new rules")
        raise RuntimeError("completion did not converge in %d rounds"
                           % max_rounds)

    def dump(self):
        """Plain-text listing of the rules, deterministic order."""
        lines = []
        for lhs in sorted(self.rules, key=word_key):
            rhs = NcPoly(self.alg, dict(self.rules[lhs]))
            lines.append("%s -> %s" % (self.alg.word_str(lhs), rhs))
        return "\n".join(lines)
