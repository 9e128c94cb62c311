"""Reidemeister moves for projective diagrams and a random diagram generator.

The five move families act on the words of a ``Diagram``:

* ``O1`` adds or removes a kink;
* ``O2`` pushes one strand across another inside a face, or undoes it;
* ``O3`` slides a strand over the crossing of two others;
* ``O4`` folds a strand through the line at infinity, creating two new
  boundary passes, or pulls such a fold back;
* ``O5`` moves a crossing sitting next to the boundary through the line at
  infinity to the antipodal side.

Local patterns are located with the faces of the rotation system, so every
rewrite stays realizable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .diagram import BND, Diagram, DiagramError, _pieces, standard_unlink, trace_faces

__all__ = ["MoveSite", "MoveError", "find_sites", "apply_move", "random_diagram",
           "kink_factor_exponent", "graft_kink", "EXPAND", "REDUCE", "SLIDE"]

EXPAND = "expand"
REDUCE = "reduce"
SLIDE = "slide"


class MoveError(DiagramError):
    """The site does not match the diagram."""


@dataclass(frozen=True)
class MoveSite:
    kind: str
    direction: str
    location: tuple

    @property
    def crossing_delta(self):
        return {("O1", EXPAND): 1, ("O1", REDUCE): -1,
                ("O2", EXPAND): 2, ("O2", REDUCE): -2}.get((self.kind, self.direction), 0)


def _segment_tokens(d, dart):
    _, c, i, _ = dart
    w = d.words[c]
    return w[i], w[(i + 1) % len(w)]


def _strand_faces(d):
    return [f for f in trace_faces(d)] if (d.signs or d.nb) else []


def _piece_of(d):
    boundary, affine, free = _pieces(d)
    piece = {c: 0 for c in boundary}
    for k, g in enumerate(affine, 1):
        for c in g:
            piece[c] = k
    return piece


def find_sites(d):
    """Every move applicable to ``d``."""
    faces = _strand_faces(d)
    return (_o1_sites(d) + _o2_sites(d, faces) + _o3_sites(d, faces)
            + _o4_sites(d, faces) + _o5_sites(d, faces))


def apply_move(d, site):
    """Rewrite ``d`` at ``site``; raises ``MoveError`` for a stale site."""
    if site not in set(find_sites(d)):
        raise MoveError(f"site {site} does not apply to this diagram")
    fn = _APPLY[(site.kind, site.direction)]
    return fn(d, *site.location)


def _rebuild(d, words, signs, nb=None):
    return Diagram(d.nb if nb is None else nb, words, signs, d.oriented)


def _drop_crossings(d, cids):
    cids = set(cids)
    words = [tuple(t for t in w if t[0] == BND or t[0] not in cids) for w in d.words]
    signs = {x: s for x, s in d.signs.items() if x not in cids}
    return _rebuild(d, words, signs)


# O1


def _o1_sites(d):
    out = []
    for c, w in enumerate(d.words):
        for i in range(max(len(w), 1)):
            for over_first in (1, 0):
                for sign in (1, -1):
                    out.append(MoveSite("O1", EXPAND, (c, i, over_first, sign)))
        L = len(w)
        for i in range(L):
            t, u = w[i], w[(i + 1) % L]
            if L >= 2 and t[0] != BND and t[0] == u[0]:
                out.append(MoveSite("O1", REDUCE, (t[0],)))
    return out


def _o1_expand(d, c, i, over_first, sign):
    x = d.next_crossing_id()
    words = list(d.words)
    w = words[c]
    kink = ((x, over_first), (x, 1 - over_first))
    words[c] = w[:i + 1] + kink + w[i + 1:]
    signs = dict(d.signs)
    signs[x] = sign
    return _rebuild(d, words, signs)


def _o1_reduce(d, x):
    return _drop_crossings(d, (x,))


def graft_kink(d, c, i, sign, over_first=1):
    """``d`` with a kink of the given sign added after token ``i`` of ``c``."""
    return _o1_expand(d, c, i, over_first, sign)


def kink_factor_exponent(site, d):
    """Sign of the kink an O1 move adds (+1/-1) or removes (reported negated)."""
    if site.kind != "O1":
        return 0
    if site.direction == EXPAND:
        return site.location[3]
    return -d.signs[site.location[0]]


# O2


def _o2_sites(d, faces):
    out = []
    piece = _piece_of(d)
    strand_faces = []
    for f in faces:
        ds = [a for a in f if a[0] == "s"]
        strand_faces.append(ds)
        for j, a in enumerate(ds):
            for b in ds[j + 1:]:
                if a[1:3] == b[1:3]:
                    continue
                for a_over in (1, 0):
                    out.append(MoveSite("O2", EXPAND, (a, b, a_over)))
    # split pieces can be moved into any face of another piece
    by_piece = {}
    for ds in strand_faces:
        if ds:
            by_piece.setdefault(piece[ds[0][1]], []).append(ds)
    for pa, fa in by_piece.items():
        for pb, fb in by_piece.items():
            if pb <= pa or pb == 0:
                continue
            for A in fa:
                for B in fb:
                    for a_over in (1, 0):
                        out.append(MoveSite("O2", EXPAND, (A[0], B[0], a_over)))
    for f in faces:
        if len(f) != 2 or any(a[0] != "s" for a in f):
            continue
        (ta, ua), (tb, ub) = (_segment_tokens(d, a) for a in f)
        if BND in (ta[0], ua[0], tb[0], ub[0]) or ta[0] == ua[0]:
            continue
        if {ta[0], ua[0]} != {tb[0], ub[0]}:
            continue
        if ta[1] == ua[1] and d.signs[ta[0]] != d.signs[ua[0]]:
            out.append(MoveSite("O2", REDUCE, tuple(sorted((ta[0], ua[0])))))
    return out


def _insert_after(words, inserts):
    """``inserts``: list of ``(comp, index, tokens)`` placed after ``index``."""
    words = [list(w) for w in words]
    for c, i, toks in sorted(inserts, key=lambda z: (z[0], z[1]), reverse=True):
        w = words[c]
        if not w:
            w.extend(toks)
        else:
            w[i + 1:i + 1] = toks
    return [tuple(w) for w in words]


def _o2_expand(d, a, b, a_over):
    x = d.next_crossing_id()
    y = x + 1
    _, ca, ia, da = a
    _, cb, ib, db = b
    sx = -(1 if a_over else -1) * da * db
    on_a = [(x, a_over), (y, a_over)]
    on_b = [(y, 1 - a_over), (x, 1 - a_over)]
    if da < 0:
        on_a.reverse()
    if db < 0:
        on_b.reverse()
    words = _insert_after(d.words, [(ca, ia, on_a), (cb, ib, on_b)])
    signs = dict(d.signs)
    signs[x] = sx
    signs[y] = -sx
    return _rebuild(d, words, signs)


def _o2_reduce(d, x, y):
    return _drop_crossings(d, (x, y))


# O3


def _o3_sites(d, faces):
    out = []
    for f in faces:
        if len(f) != 3 or any(a[0] != "s" for a in f):
            continue
        segs = [_segment_tokens(d, a) for a in f]
        if any(t[0] == BND or u[0] == BND or t[0] == u[0] for t, u in segs):
            continue
        if len({t[0] for t, _ in segs} | {u[0] for _, u in segs}) != 3:
            continue
        overs = sorted(t[1] + u[1] for t, u in segs)
        if overs != [0, 1, 2]:
            continue
        out.append(MoveSite("O3", SLIDE, tuple(sorted(a[1:3] for a in f))))
    return out


def _o3_slide(d, *segments):
    words = [list(w) for w in d.words]
    for c, i in segments:
        w = words[c]
        j = (i + 1) % len(w)
        w[i], w[j] = w[j], w[i]
    return _rebuild(d, words, d.signs)


# O4


def _o4_sites(d, faces):
    out = []
    nb = d.nb
    piece = _piece_of(d)
    if nb == 0:
        for c, w in enumerate(d.words):
            for i in range(max(1, len(w))):
                for di in (1, -1):
                    out.append(MoveSite("O4", EXPAND, (("s", c, i, di), 0)))
    else:
        for f in faces:
            gaps = [a[1] + 1 for a in f if a[0] == "b" and a[2] < 0]
            darts = [a for a in f if a[0] == "s"]
            for a in darts:
                for p in gaps:
                    out.append(MoveSite("O4", EXPAND, (a, p % nb)))
        # split pieces may sit next to any gap of the boundary
        for f in faces:
            darts = [a for a in f if a[0] == "s" and piece[a[1]] != 0]
            for a in darts:
                for p in range(nb):
                    out.append(MoveSite("O4", EXPAND, (a, p)))
    h = nb // 2
    for c, w in enumerate(d.words):
        L = len(w)
        if L < 2:
            continue
        for i in range(L):
            t, u = w[i], w[(i + 1) % L]
            if t[0] == BND and u[0] == BND and (u[1] - (t[1] + h)) % nb in (1, nb - 1):
                if L == 2 and i == 1:
                    continue
                out.append(MoveSite("O4", REDUCE, (c, i)))
    return list(dict.fromkeys(out))


def _o4_expand(d, a, p):
    _, c, i, di = a
    nb = d.nb
    h = nb // 2
    # new cyclic order: two new positions after p - 1 and two after
    # p - 1 + h, so that old labels keep their order
    order = []
    for q in range(nb):
        order.append(q)
        if (q + 1) % nb == p:
            order += ["N1", "N2"]
        if (q + 1) % nb == (p + h) % nb:
            order += ["M1", "M2"]
    if nb == 0:
        order = ["N1", "N2", "M1", "M2"]
    index = {q: k for k, q in enumerate(order)}
    nb2 = nb + 4
    words = [tuple((BND, index[t[1]]) if t[0] == BND else t for t in w) for w in d.words]
    fold = [(BND, index["N1"]), (BND, index["M2"])]
    if di < 0:
        fold = [(BND, index["N2"]), (BND, index["M1"])]
    words = _insert_after(words, [(c, i, fold)])
    return _rebuild(d, words, d.signs, nb=nb2)


def _o4_reduce(d, c, i):
    from .diagram import _compact_boundary

    w = d.words[c]
    L = len(w)
    j = (i + 1) % L
    words = list(d.words)
    words[c] = tuple(t for k, t in enumerate(w) if k not in (i, j))
    nb, words = _compact_boundary(d.nb, words)
    return _rebuild(d, words, d.signs, nb=nb)


# O5


def _o5_sites(d, faces):
    out = []
    nb = d.nb
    if nb < 4:
        return out
    for f in faces:
        if len(f) != 3:
            continue
        bd = [a for a in f if a[0] == "b"]
        sd = [a for a in f if a[0] == "s"]
        if len(bd) != 1 or len(sd) != 2 or bd[0][2] > 0:
            continue
        txs = set()
        for a in sd:
            t, u = _segment_tokens(d, a)
            kinds = (t[0] == BND, u[0] == BND)
            if kinds not in ((True, False), (False, True)):
                break
            txs.add(u[0] if kinds[0] else t[0])
        else:
            if len(txs) == 1:
                out.append(MoveSite("O5", SLIDE, ((bd[0][1] + 1) % nb,)))
    return out


def _o5_slide(d, p):
    nb = d.nb
    h = nb // 2
    q = (p - 1) % nb
    bindex = d.boundary_index()
    x = None
    edits = []
    for e, f in ((p, q), (q, p)):
        c, i, is_exit = bindex[e]
        w = d.words[c]
        L = len(w)
        if is_exit:
            k = (i - 1) % L
            x = w[k][0]
            edits.append((c, k, i, [(BND, f), (x, 1 - w[k][1])]))
        else:
            k = (i + 1) % L
            x = w[k][0]
            edits.append((c, i, k, [(x, 1 - w[k][1]), (BND, (f + h) % nb)]))
    words = [list(w) for w in d.words]
    for c, k1, k2, (t1, t2) in edits:
        words[c][k1] = t1
        words[c][k2] = t2
    # over and under trade places and the antipodal side is seen mirrored,
    # so the sign survives
    return _rebuild(d, words, d.signs)


_APPLY = {
    ("O1", EXPAND): _o1_expand,
    ("O1", REDUCE): _o1_reduce,
    ("O2", EXPAND): _o2_expand,
    ("O2", REDUCE): _o2_reduce,
    ("O3", SLIDE): _o3_slide,
    ("O4", EXPAND): _o4_expand,
    ("O4", REDUCE): _o4_reduce,
    ("O5", SLIDE): _o5_slide,
}


# generator


def _start(num_projective, num_affine, oriented):
    if num_projective:
        d = standard_unlink(num_projective, oriented)
    else:
        d = Diagram(0, [], {}, oriented)
    if num_affine:
        d = Diagram(d.nb, list(d.words) + [()] * num_affine, d.signs, oriented)
    return d


def random_diagram(seed, max_crossings, num_projective=1, num_affine=0, oriented=True,
                   steps=None, max_boundary=None):
    """A valid diagram obtained from an unlink by random moves and switches.

    The start is ``standard_unlink(num_projective)`` plus ``num_affine``
    free circles.  Expanding moves and crossing switches are applied while
    the crossing count stays at most ``max_crossings``; boundary folds stop
    once ``max_boundary`` positions are in use (default: two more pairs than
    the start).
    """
    rng = random.Random(seed)
    d = _start(num_projective, num_affine, oriented)
    if max_boundary is None:
        max_boundary = d.nb + 4
    if steps is None:
        steps = 3 * max_crossings + 4
    for _ in range(steps):
        sites = find_sites(d)
        ok = []
        for s in sites:
            if d.crossing_count + s.crossing_delta > max_crossings:
                continue
            if s.kind == "O4" and s.direction == EXPAND and d.nb + 4 > max_boundary:
                continue
            ok.append(s)
        roll = rng.random()
        if d.signs and roll < 0.3:
            x = rng.choice(sorted(d.signs))
            d = d.switch(x)
            continue
        if not ok:
            break
        # favour moves that keep the picture interesting
        kinds = sorted({s.kind for s in ok})
        kind = rng.choice(kinds)
        site = rng.choice([s for s in ok if s.kind == kind])
        d = _APPLY[(site.kind, site.direction)](d, *site.location)
    return d.relabeled_crossings()
