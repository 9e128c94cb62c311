"""Pure-Python versions of the inner loops.

Same functions and semantics as the compiled ``_speedups`` module.
Polynomials are dicts mapping exponent tuples to nonzero ints.
"""


def poly_add(p, q, sign):
    """Return ``p + sign * q`` as a new dict."""
    out = dict(p)
    for e, c in q.items():
        v = out.get(e, 0) + sign * c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def poly_shift(p, key, coeff):
    return {tuple(a + b for a, b in zip(e, key)): c * coeff for e, c in p.items()}


def poly_mul(p, q):
    if len(p) < len(q):
        p, q = q, p
    if not q:
        return {}
    if len(q) == 1:
        (key, coeff), = q.items()
        return poly_shift(p, key, coeff)
    out = {}
    get = out.get
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def divide_by_s2_minus_1(row):
    """Divide a one-variable Laurent polynomial by ``s^2 - 1``.

    ``row`` maps exponents to coefficients.  Returns the quotient dict, or
    ``None`` if the division is not exact.
    """
    lo = min(row)
    hi = max(row)
    q = {}
    for e in range(hi, lo + 1, -1):
        val = row.get(e, 0) + q.get(e, 0)
        if val:
            q[e - 2] = val
    for e in (lo + 1, lo):
        if row.get(e, 0) + q.get(e, 0):
            return None
    return q

