"""Basepoints, descending diagrams and switch plans.

A diagram is *descending* from a basepoint when every crossing met while
travelling from it is passed over on the first visit if an even number of
boundary passes have been made so far, and under otherwise.  The evaluators
reach a descending diagram by switching the crossings listed by
``switch_plan``.

Travel direction always follows the reference orientation.  Basepoints that
travel the other way are first turned around with ``oriented_view``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .diagram import (
    BND,
    AffinePoint,
    BasedDiagram,
    Diagram,
    DiagramError,
    PrimaryPair,
    SelfCrossing,
    standard_based,
)

NO_CROSSINGS = "no-crossings"
SIMPLE = "simple"
AFFINE_BASE = "affine-base"
SELF_CROSS_BASE = "self-cross-base"

__all__ = [
    "ArcPoint",
    "BasepointFrame",
    "NO_CROSSINGS",
    "SIMPLE",
    "AFFINE_BASE",
    "SELF_CROSS_BASE",
    "classify",
    "arc_distance",
    "first_pass",
    "is_descending",
    "frame",
    "dashed_part",
    "oriented_view",
    "descending_targets",
    "switch_plan",
    "is_almost_standard",
    "canonical_basepoint",
    "canonically_oriented",
    "admissible_basepoints",
    "strip_trivial_components",
]


@dataclass(frozen=True)
class ArcPoint:
    """Point on component ``comp`` just before token ``index``."""

    comp: int
    index: int


@dataclass(frozen=True)
class BasepointFrame:
    """Component order and goodness for a simple diagram.

    ``order`` starts with the primary component; ``couple[c]`` is the index
    of the boundary token whose endpoints form the couple of ``c``.
    """

    order: tuple
    couple: dict
    good: dict

    @property
    def k(self):
        return sum(1 for c in self.order if self.good[c])

    @property
    def l(self):
        return len(self.order) - self.k


def strip_trivial_components(d):
    """Remove crossing-free zero-homologous components.

    Returns ``(diagram, count)``.  Each removed component is a split unknot
    and contributes one factor of the affine unknot value.
    """
    busy = {c for ps in d.passes().values() for c, _, _ in ps}
    drop = [c for c, w in enumerate(d.words) if c not in busy and d.homology(c) == 0]
    if not drop:
        return d, 0
    return d.without_components(drop), len(drop)


def classify(d):
    """Which inductive case applies to ``d``.

    Diagrams with a zero-homologous component involved in a crossing use an
    affine basepoint; otherwise a self-crossing of a one-homologous
    component is used; otherwise the diagram is simple.
    """
    if not d.signs:
        return NO_CROSSINGS
    for c in _busy_components(d):
        if d.homology(c) == 0:
            return AFFINE_BASE
    for x in d.signs:
        if d.is_self_crossing(x):
            return SELF_CROSS_BASE
    return SIMPLE


def _busy_components(d):
    return sorted({c for ps in d.passes().values() for c, _, _ in ps})


def _walk(d, p, q):
    """Tokens met travelling from ``p`` to ``q`` on one component.

    ``q == p`` means one full turn.
    """
    if p.comp != q.comp:
        raise DiagramError("points lie on different components")
    w = d.words[p.comp]
    L = len(w)
    n = (q.index - p.index) % L or L
    return [((p.index + k) % L, w[(p.index + k) % L]) for k in range(n)]


def arc_distance(d, p, q):
    """Number of boundary passes between ``p`` and ``q``."""
    if p == q:
        return 0
    return sum(1 for _, t in _walk(d, p, q) if t[0] == BND)


def first_pass(d, p, x):
    """The first pass through crossing ``x`` met travelling from ``p``.

    Returns ``("over" | "under", ArcPoint)`` with the point just before the
    pass.
    """
    for i, t in _walk(d, p, p):
        if t[0] == x:
            return ("over" if t[1] else "under"), ArcPoint(p.comp, i)
    raise DiagramError(f"crossing {x} is not on component {p.comp}")


def is_descending(d, p, q):
    """Whether ``d`` descends along the path from ``p`` to ``q``."""
    arcs = 0
    seen = set()
    for _, t in _walk(d, p, q):
        if t[0] == BND:
            arcs += 1
        elif t[0] not in seen:
            seen.add(t[0])
            if bool(t[1]) != (arcs % 2 == 0):
                return False
    return True


def frame(bd):
    """Order the one-homologous components of a simple based diagram.

    Walking counterclockwise around the boundary from the initial primary
    endpoint, each further component is listed when one of its endpoints is
    first met; it is good when that endpoint is initial.
    """
    d = bd.diagram
    base = bd.base
    if not isinstance(base, PrimaryPair):
        raise DiagramError("frames need a primary basepoint")
    a, t = base.comp, base.token
    q0 = d.antipode(d.words[a][t][1])
    bindex = d.boundary_index()
    order = [a]
    couple = {a: t}
    good = {a: True}
    for step in range(1, d.nb):
        c, i, is_exit = bindex[(q0 + step) % d.nb]
        if c in couple or d.homology(c) == 0:
            continue
        couple[c] = i
        good[c] = not is_exit
        order.append(c)
    return BasepointFrame(tuple(order), couple, good)


def dashed_part(d, x):
    """The even half of a one-homologous component cut at self-crossing ``x``.

    Returns ``(comp, start, indices)``: ``start`` is the index of the pass of
    ``x`` that begins the dashed part and ``indices`` the token indices
    strictly inside it, in travel order.
    """
    (c1, i1, _), (c2, i2, _) = d.passes()[x]
    if c1 != c2:
        raise DiagramError(f"crossing {x} is not a self-crossing")
    w = d.words[c1]
    L = len(w)
    inner = list(range(i1 + 1, i2))
    if sum(1 for i in inner if w[i][0] == BND) % 2 == 0:
        return c1, i1, inner
    outer = [(i2 + 1 + k) % L for k in range(L - (i2 - i1) - 1)]
    return c1, i2, outer


def oriented_view(bd):
    """Equivalent based diagram whose basepoint travels forward."""
    d, base = bd.diagram, bd.base
    if isinstance(base, AffinePoint) and base.direction < 0:
        L = len(d.words[base.comp])
        return BasedDiagram(d.reverse_component(base.comp),
                            AffinePoint(base.comp, (L - base.index) % L))
    if isinstance(base, SelfCrossing) and base.direction < 0:
        c = d.crossing_components(base.crossing)[0]
        return BasedDiagram(d.reverse_component(c), SelfCrossing(base.crossing))
    return bd


def descending_targets(bd):
    """``{crossing: (comp, index)}`` naming the pass that must be over.

    Only constrained crossings appear.  The based diagram must travel
    forward (see ``oriented_view``).
    """
    d, base = bd.diagram, bd.base
    words = d.words
    targets = {}
    passes = d.passes()

    def other(x, c, i):
        for p in passes[x]:
            if (p[0], p[1]) != (c, i):
                return p[0], p[1]

    if isinstance(base, PrimaryPair):
        fr = frame(bd)
        rank = {c: r for r, c in enumerate(fr.order)}
        for c in fr.order:
            w = words[c]
            L = len(w)
            start = fr.couple[c] + 1
            arcs = 0
            for k in range(L):
                i = (start + k) % L
                t = w[i]
                if t[0] == BND:
                    arcs += 1
                    continue
                oc, oi = other(t[0], c, i)
                if rank.get(oc, -1) > rank[c]:
                    targets[t[0]] = (c, i) if arcs % 2 == 0 else (oc, oi)
        return targets

    if isinstance(base, AffinePoint):
        c = base.comp
        w = words[c]
        L = len(w)
        arcs = 0
        for k in range(L):
            i = (base.index + k) % L
            t = w[i]
            if t[0] == BND:
                arcs += 1
            elif t[0] not in targets:
                targets[t[0]] = (c, i) if arcs % 2 == 0 else other(t[0], c, i)
        return targets

    if isinstance(base, SelfCrossing):
        c, start, inner = dashed_part(d, base.crossing)
        w = words[c]
        targets[base.crossing] = (c, start)
        arcs = 0
        for i in inner:
            t = w[i]
            if t[0] == BND:
                arcs += 1
            elif t[0] not in targets:
                targets[t[0]] = (c, i) if arcs % 2 == 0 else other(t[0], c, i)
        return targets

    raise TypeError(f"unknown basepoint {base!r}")


def switch_plan(bd):
    """Crossings to switch to make ``bd`` descending, in a canonical order."""
    bd = oriented_view(bd)
    d = bd.diagram
    out = []
    for x, (c, i) in descending_targets(bd).items():
        if not d.words[c][i][1]:
            out.append(x)
    return tuple(sorted(out))


def _flat_based_code(bd, fr):
    d = bd.diagram
    q0 = d.antipode(d.words[bd.base.comp][bd.base.token][1])
    labels = {}
    out = []
    for c in fr.order:
        w = d.words[c]
        L = len(w)
        start = fr.couple[c] + 1
        out.append(("|", fr.good[c]))
        for k in range(L):
            t = w[(start + k) % L]
            if t[0] == BND:
                out.append(("B", (t[1] - q0) % d.nb))
            elif t[0] in labels:
                out.append(("X", labels[t[0]]))
            else:
                labels[t[0]] = len(labels)
                flat = d.signs[t[0]] * (1 if t[1] else -1)
                out.append(("X", labels[t[0]], flat))
    return tuple(out)


@lru_cache(maxsize=None)
def _standard_flat_code(k, l):
    bd = standard_based(k, l)
    return _flat_based_code(bd, frame(bd))


def is_almost_standard(bd):
    """Whether ``bd`` is the standard based diagram up to crossing switches."""
    d, _ = strip_trivial_components(bd.diagram)
    if d is not bd.diagram:
        bd = _rebase_after_strip(bd, d)
    if any(d.homology(c) == 0 for c in range(d.n_components)):
        return False
    if not isinstance(bd.base, PrimaryPair):
        return False
    fr = frame(bd)
    if len(fr.order) != d.n_components:
        return False
    return _flat_based_code(bd, fr) == _standard_flat_code(fr.k, fr.l)


def _rebase_after_strip(bd, d):
    # stripped components are zero-homologous, so the primary one survives;
    # locate it again by its boundary token
    old = bd.diagram
    a, t = bd.base.comp, bd.base.token
    survivors = [c for c in range(old.n_components)
                 if old.homology(c) == 1 or c in _busy_components(old)]
    c_new = survivors.index(a)
    exits = [i for i, tok in enumerate(old.words[a]) if tok[0] == BND]
    rank = exits.index(t)
    j = [i for i, tok in enumerate(d.words[c_new]) if tok[0] == BND][rank]
    return BasedDiagram(d, PrimaryPair(c_new, j))


def canonically_oriented(bd):
    """Reorient every component so its least boundary position is initial.

    Used for unoriented simple diagrams, where descending is tested after
    choosing these orientations.  The primary pair is carried along.
    """
    d = bd.diagram
    base = bd.base
    least = {}
    bindex = d.boundary_index()
    for p in sorted(bindex):
        c, _, is_exit = bindex[p]
        least.setdefault(c, is_exit)
    for c, is_exit in least.items():
        if is_exit:
            d = d.reverse_component(c)
            if base.comp == c:
                base = PrimaryPair(c, len(d.words[c]) - 1 - base.token)
    return BasedDiagram(d, base)


def canonical_basepoint(d):
    """Deterministic admissible basepoint for ``d``.

    Simple diagrams use the primary pair that owns boundary position 0,
    diagrams with a busy zero-homologous component use the point before its
    first crossing, and the remaining ones use the smallest self-crossing
    of a one-homologous component.
    """
    kind = classify(d)
    if kind == SIMPLE:
        c, i, _ = d.boundary_index()[0]
        return BasedDiagram(d, PrimaryPair(c, i))
    if kind == AFFINE_BASE:
        for c in _busy_components(d):
            if d.homology(c) == 0:
                w = d.words[c]
                i = next(k for k, t in enumerate(w) if t[0] != BND)
                return BasedDiagram(d, AffinePoint(c, i))
    if kind == SELF_CROSS_BASE:
        x = min(x for x in d.signs if d.is_self_crossing(x))
        return BasedDiagram(d, SelfCrossing(x))
    raise DiagramError("diagram without crossings has no basepoint")


def admissible_basepoints(d, directed=False):
    """Every basepoint the inductive definition may use for ``d``.

    With ``directed`` set, affine and self-crossing basepoints come in both
    travel directions (needed for unoriented diagrams).
    """
    kind = classify(d)
    dirs = (1, -1) if directed else (1,)
    out = []
    if kind == SIMPLE:
        for c in range(d.n_components):
            if d.homology(c) == 1:
                for i, t in enumerate(d.words[c]):
                    if t[0] == BND:
                        out.append(BasedDiagram(d, PrimaryPair(c, i)))
    elif kind == AFFINE_BASE:
        for c in _busy_components(d):
            if d.homology(c) == 0:
                for i in range(len(d.words[c])):
                    for di in dirs:
                        out.append(BasedDiagram(d, AffinePoint(c, i, di)))
    elif kind == SELF_CROSS_BASE:
        for x in sorted(d.signs):
            c1, c2 = d.crossing_components(x)
            if c1 == c2 and d.homology(c1) == 1:
                for di in dirs:
                    out.append(BasedDiagram(d, SelfCrossing(x, di)))
    return out

