# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled inner loops for Laurent polynomial arithmetic.

Mirrors ``_pykernels`` exactly.  Exponent tuples are added with typed
loops and coefficients stay Python ints so nothing can overflow.
"""


cdef inline tuple _add_exps(tuple a, tuple b):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t i
    cdef list out = [None] * n
    for i in range(n):
        out[i] = <long>a[i] + <long>b[i]
    return tuple(out)


def poly_add(dict p, dict q, long sign):
    """Return ``p + sign * q`` as a new dict."""
    cdef dict out = dict(p)
    cdef object e, c, v
    for e, c in q.items():
        v = out.get(e, 0) + sign * c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def poly_shift(dict p, tuple key, object coeff):
    cdef dict out = {}
    cdef object e, c
    for e, c in p.items():
        out[_add_exps(<tuple>e, key)] = c * coeff
    return out


def poly_mul(dict p, dict q):
    if len(p) < len(q):
        p, q = q, p
    if not q:
        return {}
    if len(q) == 1:
        for key, coeff in q.items():
            return poly_shift(p, key, coeff)
    cdef list qs = list(q.items())
    cdef dict out = {}
    cdef object e1, c1, c2, prev
    cdef tuple e2, e
    for e1, c1 in p.items():
        for e2, c2 in qs:
            e = _add_exps(<tuple>e1, e2)
            prev = out.get(e)
            out[e] = c1 * c2 if prev is None else prev + c1 * c2
    return {e: c1 for e, c1 in out.items() if c1}


def divide_by_s2_minus_1(dict row):
    """Quotient of a one-variable Laurent polynomial by ``s^2 - 1``, or None."""
    cdef long lo = min(row)
    cdef long hi = max(row)
    cdef long e
    cdef dict q = {}
    cdef object val
    for e in range(hi, lo + 1, -1):
        val = row.get(e, 0) + q.get(e, 0)
        if val:
            q[e - 2] = val
    for e in (lo + 1, lo):
        if row.get(e, 0) + q.get(e, 0):
            return None
    return q
