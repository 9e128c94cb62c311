"""Classical framed HOMFLY-PT and Kauffman polynomials of affine diagrams.

These evaluators work only on diagrams without boundary passes and share
nothing with the projective engines except the coefficient rings.  They
walk the components in word order from the start of each word and switch
the first crossing whose first visit is an underpass, until the diagram is
a stack of descending components.  Both are normalised to 1 on the
crossing-free unknot.

Also provides a few named affine diagrams used as fixtures.
"""

from __future__ import annotations

from .diagram import BND, Diagram, DiagramError
from .ring import HomflyValue, KauffmanValue, delta, mu, sigma

__all__ = ["classical_homfly", "classical_kauffman", "trefoil", "figure_eight",
           "hopf_link", "unknot", "kinked_unknot", "affine_unlink"]


def _check_affine(d):
    if d.nb or any(t[0] == BND for w in d.words for t in w):
        raise DiagramError("the classical oracle needs an affine diagram")


def _state(d):
    """Plain mutable form: list of token lists and a sign dict."""
    return [list(w) for w in d.words], dict(d.signs)


def _first_bad(words):
    seen = set()
    for w in words:
        for cid, over in w:
            if cid in seen:
                continue
            seen.add(cid)
            if not over:
                return cid
    return None


def _locate(words, cid):
    return [(c, i) for c, w in enumerate(words) for i, t in enumerate(w) if t[0] == cid]


def _switch(words, signs, cid):
    words = [[(t[0], 1 - t[1]) if t[0] == cid else t for t in w] for w in words]
    signs = dict(signs)
    signs[cid] = -signs[cid]
    return words, signs


def _resolve(words, signs, cid, oriented):
    """Remove ``cid`` by the oriented or the other smoothing."""
    (c1, i1), (c2, i2) = _locate(words, cid)
    signs = {x: s for x, s in signs.items() if x != cid}
    rest = [w for k, w in enumerate(words) if k not in (c1, c2)]
    if c1 != c2:
        a = words[c1][i1 + 1:] + words[c1][:i1]
        b = words[c2][i2 + 1:] + words[c2][:i2]
        if oriented:
            return rest + [a + b], signs
        flipped = b
        new = rest + [a + b[::-1]]
    else:
        w = words[c1]
        inner = w[i1 + 1:i2]
        outer = w[i2 + 1:] + w[:i1]
        if oriented:
            return rest + [inner, outer], signs
        flipped = outer
        new = rest + [inner + outer[::-1]]
    once = {}
    for x, _ in flipped:
        once[x] = once.get(x, 0) + 1
    signs = {x: (-s if once.get(x) == 1 else s) for x, s in signs.items()}
    return new, signs


def _self_writhe(words, signs):
    w = 0
    owners = {}
    for c, word in enumerate(words):
        for cid, _ in word:
            owners.setdefault(cid, set()).add(c)
    for cid, s in signs.items():
        if len(owners[cid]) == 1:
            w += s
    return w


def classical_homfly(d):
    """Framed HOMFLY-PT polynomial with value 1 on the unknot."""
    _check_affine(d)
    if not d.oriented:
        raise DiagramError("HOMFLY-PT needs an oriented diagram")
    words, signs = _state(d)
    return _homfly(words, signs, mu(), sigma())


def _homfly(words, signs, m, sig):
    x = _first_bad(words)
    if x is None:
        n = len(words)
        w = _self_writhe(words, signs)
        base = m ** (n - 1) if n > 1 else HomflyValue.one()
        return base.shift(x=w, v=-w) if n else HomflyValue.one()
    eps = signs[x]
    sw, ss = _switch(words, signs, x)
    sm, smsigns = _resolve(words, signs, x, True)
    # H(D) = x^(2e) H(D switched) + e x^e (s - s^-1) H(D smoothed)
    return (_homfly(sw, ss, m, sig).shift(x=2 * eps)
            + (sig * _homfly(sm, smsigns, m, sig)).shift(eps, x=eps))


def classical_kauffman(d):
    """Framed Kauffman polynomial (D+ + D- = z(D0 + Dinf)) with unknot 1."""
    _check_affine(d)
    words, signs = _state(d)
    return _kauffman(words, signs, delta())


def _key(words, signs):
    names = {}
    out = []
    for w in words:
        out.append(tuple((names.setdefault(c, len(names)), o, signs[c]) for c, o in w))
    return tuple(out)


def _kauffman(words, signs, dd, memo=None):
    if memo is None:
        memo = {}
    key = _key(words, signs)
    hit = memo.get(key)
    if hit is not None:
        return hit
    x = _first_bad(words)
    if x is None:
        n = len(words)
        w = _self_writhe(words, signs)
        base = dd ** (n - 1) if n > 1 else KauffmanValue.one()
        return base.shift(a=w)
    sw, ss = _switch(words, signs, x)
    a, asg = _resolve(words, signs, x, True)
    b, bsg = _resolve(words, signs, x, False)
    pair = _kauffman(a, asg, dd, memo) + _kauffman(b, bsg, dd, memo)
    out = pair.shift(z=1) - _kauffman(sw, ss, dd, memo)
    memo[key] = out
    return out


# named affine diagrams


def unknot(oriented=True):
    return Diagram(0, [()], {}, oriented)


def affine_unlink(n, oriented=True):
    return Diagram(0, [()] * n, {}, oriented)


def kinked_unknot(sign=1, oriented=True):
    return Diagram(0, [((1, 1), (1, 0))], {1: sign}, oriented)


def trefoil(right_handed=True, oriented=True):
    """Standard three-crossing trefoil; right-handed has positive crossings."""
    s = 1 if right_handed else -1
    word = ((1, 1), (2, 0), (3, 1), (1, 0), (2, 1), (3, 0))
    return Diagram(0, [word], {1: s, 2: s, 3: s}, oriented)


def figure_eight(oriented=True):
    word = ((1, 1), (2, 0), (3, 1), (4, 0), (2, 1), (1, 0), (4, 1), (3, 0))
    return Diagram(0, [word], dict(_FIG8_SIGNS), oriented)


def hopf_link(sign=1, oriented=True):
    return Diagram(0, [((1, 1), (2, 0)), ((1, 0), (2, 1))], {1: sign, 2: sign}, oriented)


# found by checking planarity of all sign patterns for the word above
_FIG8_SIGNS = {1: -1, 2: -1, 3: 1, 4: 1}
