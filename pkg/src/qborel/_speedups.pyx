# cython: language_level=3
# cython: boundscheck=False, wraparound=False
"""Compiled straightening kernel.

Exports the same interface as qborel.ncalg._kernel_py (nf_terms and
tensor_step); the rule system selects whichever is importable.  The
tensor_step fast path keeps coefficients as raw (numerator-list,
denominator) pairs in the cyclotomic basis and only rebuilds normalized
field elements on exit.
"""

from math import gcd

KERNEL = "cython"


# -- raw cyclotomic arithmetic ------------------------------------------------
# a coefficient is [list num, int den]; num has fixed length deg; den > 0
# is not kept reduced until finalization.

cdef Py_ssize_t _single_nonzero(list a, Py_ssize_t deg):
    # index of the only nonzero entry, or -1
    cdef Py_ssize_t i, found = -1
    for i in range(deg):
        if a[i]:
            if found >= 0:
                return -1
            found = i
    return found


cdef list _mul_red(list a, list b, tuple red, Py_ssize_t deg):
    cdef Py_ssize_t i, j, k, ia, ib
    cdef object ai, bj, c
    cdef tuple row
    cdef list out
    # monomial fast paths: rule and power-of-q coefficients are usually
    # a single basis term, so the generic deg^2 convolution is rare
    ia = _single_nonzero(a, deg)
    if ia >= 0:
        ai = a[ia]
        ib = _single_nonzero(b, deg)
        if ib >= 0:
            out = [0] * deg
            c = ai * b[ib]
            k = ia + ib
            if k < deg:
                out[k] = c
            else:
                row = red[k - deg]
                for j in range(deg):
                    if row[j]:
                        out[j] = c * row[j]
            return out
        if ia == 0:
            return [ai * bj if bj else 0 for bj in b]
        out = [0] * (2 * deg - 1)
        for j in range(deg):
            bj = b[j]
            if bj:
                out[ia + j] = ai * bj
    else:
        out = [0] * (2 * deg - 1)
        for i in range(deg):
            ai = a[i]
            if ai:
                for j in range(deg):
                    bj = b[j]
                    if bj:
                        out[i + j] = out[i + j] + ai * bj
    for k in range(2 * deg - 2, deg - 1, -1):
        c = out[k]
        if c:
            row = red[k - deg]
            for j in range(deg):
                if row[j]:
                    out[j] = out[j] + c * row[j]
    del out[deg:]
    return out


cdef void _iadd(list acc, list term, Py_ssize_t deg):
    # acc, term: [num list, den]; acc is updated in place
    cdef Py_ssize_t j
    cdef object da = acc[1], db = term[1]
    cdef list na = acc[0], nb = term[0]
    if da == db:
        for j in range(deg):
            na[j] = na[j] + nb[j]
        return
    for j in range(deg):
        na[j] = na[j] * db + nb[j] * da
    acc[1] = da * db


cdef object _finalize(list raw, object ctx, object cyclo):
    # normalized CycloNum from a raw pair; returns None when zero
    cdef list num = raw[0]
    cdef object den = raw[1]
    cdef Py_ssize_t j
    cdef object g = den
    cdef bint nz = False
    for j in range(len(num)):
        if num[j]:
            nz = True
            g = gcd(g, num[j])
    if not nz:
        return None
    if g > 1:
        num = [c // g for c in num]
        den = den // g
    return cyclo(ctx, tuple(num), den)


# -- plain rewrite (CycloNum coefficients, same semantics as the pure lane) --

cdef dict _convert_rules(dict rules):
    cdef dict rraw = {}
    cdef list conv
    for lhs, rhs in rules.items():
        conv = []
        for rw, rc in rhs:
            conv.append((rw, (list(rc.num), rc.den)))
        rraw[lhs] = tuple(conv)
    return rraw


def nf_terms(dict rules, tuple lengths, items, budget, raw_cache=None):
    """Rewrite every (word, coeff) pair to normal form.  See the pure
    kernel for the interface contract.  raw_cache, when given, is a dict
    owned by the rule system (cleared on rule changes) holding the rules
    converted to raw coefficient pairs; with it the rewrite runs on raw
    cyclotomic arithmetic throughout."""
    if raw_cache is not None:
        return _nf_terms_raw(rules, lengths, items, budget, raw_cache)
    return _nf_terms_obj(rules, lengths, items, budget)


def _nf_terms_raw(dict rules, tuple lengths, items, budget, dict raw_cache):
    cdef list pairs = list(items)
    if not pairs:
        return {}
    cdef object ctx = pairs[0][1].ctx
    cdef object cyclo = type(pairs[0][1])
    cdef tuple red = tuple(tuple(r) for r in ctx._red)
    cdef Py_ssize_t deg = ctx.deg
    cdef Py_ssize_t maxlen = lengths[len(lengths) - 1] if lengths else 0
    cdef dict rraw = <dict> raw_cache.get("rules")
    if rraw is None:
        rraw = _convert_rules(rules)
        raw_cache["rules"] = rraw
    cdef long long steps = 0, cap = budget
    cdef dict out = {}
    cdef list stack = [(w, [list(c.num), c.den], 0) for w, c in pairs]
    cdef Py_ssize_t i, n, L, ns
    cdef tuple word, head, tail
    cdef object rhs, prev, cv
    cdef list coeff
    cdef bint found
    while stack:
        word, coeff, start = stack.pop()
        n = len(word)
        i = start
        rhs = None
        found = False
        while i < n:
            for L in lengths:
                if i + L > n:
                    break
                rhs = rraw.get(word[i:i + L])
                if rhs is not None:
                    found = True
                    break
            if found:
                break
            i += 1
        if not found:
            prev = out.get(word)
            if prev is None:
                out[word] = coeff
            else:
                _iadd(<list> prev, coeff, deg)
            continue
        steps += 1
        if steps > cap:
            raise RuntimeError("rewrite budget exceeded (%d steps)" % budget)
        head = word[:i]
        tail = word[i + L:]
        ns = i - maxlen + 1
        if ns < 0:
            ns = 0
        for rw, rc in rhs:
            stack.append((head + rw + tail,
                          [_mul_red(coeff[0], <list> rc[0], red, deg),
                           coeff[1] * rc[1]], ns))
    cdef dict res = {}
    for word, raw in out.items():
        cv = _finalize(<list> raw, ctx, cyclo)
        if cv is not None:
            res[word] = cv
    return res


def _nf_terms_obj(dict rules, tuple lengths, items, budget):
    cdef dict out = {}
    cdef Py_ssize_t maxlen = lengths[len(lengths) - 1] if lengths else 0
    cdef list stack = [(w, c, 0) for w, c in items]
    cdef long long steps = 0, cap = budget
    cdef Py_ssize_t i, n, L, ns
    cdef tuple word, head, tail, lhs
    cdef object coeff, rhs, prev, s
    cdef bint found
    while stack:
        word, coeff, start = stack.pop()
        n = len(word)
        i = start
        rhs = None
        found = False
        while i < n:
            for L in lengths:
                if i + L > n:
                    break
                lhs = word[i:i + L]
                rhs = rules.get(lhs)
                if rhs is not None:
                    found = True
                    break
            if found:
                break
            i += 1
        if not found:
            prev = out.get(word)
            s = coeff if prev is None else prev + coeff
            if s:
                out[word] = s
            else:
                out.pop(word, None)
            continue
        steps += 1
        if steps > cap:
            raise RuntimeError("rewrite budget exceeded (%d steps)" % budget)
        head = word[:i]
        tail = word[i + L:]
        ns = i - maxlen + 1
        if ns < 0:
            ns = 0
        for rw, rc in rhs:
            stack.append((head + rw + tail, coeff * rc, ns))
    return out


# -- fused tensor multiply-and-straighten ------------------------------------

cdef dict _nf_raw(dict rules, tuple lengths, Py_ssize_t maxlen, tuple word,
                  tuple red, Py_ssize_t deg, long long* steps,
                  long long cap):
    """Normal form of a single word with raw unit coefficient; returns
    dict word -> raw pair."""
    cdef dict out = {}
    cdef list unit = [0] * deg
    unit[0] = 1
    cdef list stack = [(word, [unit, 1], 0)]
    cdef Py_ssize_t i, n, L, ns
    cdef tuple w, head, tail
    cdef object rhs, prev
    cdef list coeff, nc
    cdef bint found
    while stack:
        w, coeff, start = stack.pop()
        n = len(w)
        i = start
        rhs = None
        found = False
        while i < n:
            for L in lengths:
                if i + L > n:
                    break
                rhs = rules.get(w[i:i + L])
                if rhs is not None:
                    found = True
                    break
            if found:
                break
            i += 1
        if not found:
            prev = out.get(w)
            if prev is None:
                out[w] = coeff
            else:
                _iadd(<list> prev, coeff, deg)
            continue
        steps[0] += 1
        if steps[0] > cap:
            raise RuntimeError("rewrite budget exceeded")
        head = w[:i]
        tail = w[i + L:]
        ns = i - maxlen + 1
        if ns < 0:
            ns = 0
        for rw, rc in rhs:
            nc = [_mul_red(coeff[0], <list> rc[0], red, deg),
                  coeff[1] * rc[1]]
            stack.append((head + rw + tail, nc, ns))
    return out


def tensor_step(dict rules, tuple lengths, dict tp_terms, dict factor_terms,
                budget, raw_cache=None):
    """One multiply-and-straighten step of a tensor-square power:
    given tp_terms ((w1, w2) -> CycloNum, both factors already normal)
    and the fixed multiplier factor_terms ((u1, u2) -> CycloNum), return
    the straightened product as (word, word) -> CycloNum."""
    if not tp_terms or not factor_terms:
        return {}
    cdef object any_coeff = next(iter(factor_terms.values()))
    cdef object ctx = any_coeff.ctx
    cdef object cyclo = type(any_coeff)
    cdef tuple red = tuple(tuple(r) for r in ctx._red)
    cdef Py_ssize_t deg = ctx.deg
    cdef Py_ssize_t maxlen = lengths[len(lengths) - 1] if lengths else 0
    cdef long long steps = 0, cap = budget

    # rules with raw coefficients
    cdef dict rraw
    if raw_cache is not None:
        rraw = <dict> raw_cache.get("rules")
        if rraw is None:
            rraw = _convert_rules(rules)
            raw_cache["rules"] = rraw
    else:
        rraw = _convert_rules(rules)

    cdef dict fraw = {}
    for uu, c in factor_terms.items():
        fraw[uu] = [list(c.num), c.den]

    cdef dict nfcache = {}
    cdef dict out = {}
    cdef dict d1, d2
    cdef tuple w1, w2, a, b, key
    cdef list cc, base, c1c
    cdef object prev, cv

    for (w1, w2), c in tp_terms.items():
        cc = [list(c.num), c.den]
        for (u1, u2), fc in fraw.items():
            a = w1 + <tuple> u1
            b = w2 + <tuple> u2
            d1 = <dict> nfcache.get(a)
            if d1 is None:
                d1 = _nf_raw(rraw, lengths, maxlen, a, red, deg,
                             &steps, cap)
                nfcache[a] = d1
            d2 = <dict> nfcache.get(b)
            if d2 is None:
                d2 = _nf_raw(rraw, lengths, maxlen, b, red, deg,
                             &steps, cap)
                nfcache[b] = d2
            if not d1 or not d2:
                continue
            base = [_mul_red(cc[0], (<list> fc)[0], red, deg),
                    cc[1] * (<list> fc)[1]]
            for x, c1 in d1.items():
                c1c = [_mul_red(base[0], (<list> c1)[0], red, deg),
                       base[1] * (<list> c1)[1]]
                for y, c2 in d2.items():
                    key = (x, y)
                    term = [_mul_red(c1c[0], (<list> c2)[0], red, deg),
                            c1c[1] * (<list> c2)[1]]
                    prev = out.get(key)
                    if prev is None:
                        out[key] = term
                    else:
                        _iadd(<list> prev, term, deg)

    cdef dict res = {}
    for key, raw in out.items():
        cv = _finalize(<list> raw, ctx, cyclo)
        if cv is not None:
            res[key] = cv
    return res
