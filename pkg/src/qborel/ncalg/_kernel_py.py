"""Pure-Python straightening kernel (fallback lane).

The compiled extension qborel._speedups exports the same nf_terms; the
rule system picks whichever is available (QBOREL_PURE=1 forces this one).
"""

KERNEL = "python"


def nf_terms(rules, lengths, items, budget, raw_cache=None):
    """Rewrite every (word, coeff) pair to normal form.

    rules: dict lhs-word-tuple -> tuple of (word, coeff) replacement terms
    lengths: sorted tuple of the distinct lhs lengths
    items: iterable of (word, coeff)
    budget: max number of rule applications; RuntimeError when exceeded
    raw_cache: kernel-private scratch owned by the rule system (unused
    in the pure lane; the compiled lane caches converted rules there)

    Returns dict word -> coeff with no zero entries.  Correctness of the
    restart hint: after splicing at position i only subwords meeting
    position >= i - maxlen + 1 can newly match.
    """
    out = {}
    maxlen = lengths[-1] if lengths else 0
    stack = [(w, c, 0) for w, c in items]
    steps = 0
    while stack:
        word, coeff, start = stack.pop()
        n = len(word)
        i = start
        hit = None
        while i < n:
            for L in lengths:
                if i + L > n:
                    break
                rhs = rules.get(word[i:i + L])
                if rhs is not None:
                    hit = (i, L, rhs)
                    break
            if hit is not None:
                break
            i += 1
        if hit is None:
            prev = out.get(word)
            s = coeff if prev is None else prev + coeff
            if s:
                out[word] = s
            else:
                out.pop(word, None)
            continue
        i, L, rhs = hit
        steps += 1
        if steps > budget:
            raise RuntimeError("rewrite budget exceeded (%d steps)" % budget)
        head = word[:i]
        tail = word[i + L:]
        ns = i - maxlen + 1
        if ns < 0:
            ns = 0
        for rw, rc in rhs:
            stack.append((head + rw + tail, coeff * rc, ns))
    return out


def tensor_step(rules, lengths, tp_terms, factor_terms, budget,
                raw_cache=None):
    """One multiply-and-straighten step of a tensor-square power: given
    tp_terms ((w1, w2) -> coeff, both factors already normal) and the
    fixed multiplier factor_terms ((u1, u2) -> coeff), return the
    straightened product as (word, word) -> coeff.

    Factor words repeat across tensor keys, so normal forms are cached
    per word within the step."""
    if not tp_terms or not factor_terms:
        return {}
    one = next(iter(factor_terms.values()))
    one = one / one
    cache = {}
    out = {}
    for (w1, w2), c in tp_terms.items():
        for (u1, u2), fc in factor_terms.items():
            a, b = w1 + u1, w2 + u2
            d1 = cache.get(a)
            if d1 is None:
                d1 = cache[a] = nf_terms(rules, lengths, [(a, one)], budget)
            d2 = cache.get(b)
            if d2 is None:
                d2 = cache[b] = nf_terms(rules, lengths, [(b, one)], budget)
            base = c * fc
            for x, c1 in d1.items():
                c1c = base * c1
                for y, c2 in d2.items():
                    key = (x, y)
                    v = c1c * c2
                    s = out.get(key)
                    s = v if s is None else s + v
                    if s:
                        out[key] = s
                    else:
                        out.pop(key, None)
    return out
