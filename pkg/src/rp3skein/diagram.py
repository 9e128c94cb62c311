"""Disk diagrams of links in RP^3.

A diagram lives in a disk whose boundary circle carries ``nb = 2k`` marked
positions ``0 .. nb-1`` in counterclockwise order; position ``p`` is
identified with its antipode ``(p + k) % nb``.  Each component is stored as
a cyclic word of tokens read along its reference orientation:

* ``(cid, over)`` -- a pass through crossing ``cid``; ``over`` is 1 for the
  over strand and 0 for the under strand;
* ``(BND, p)`` -- the component runs into the boundary at ``p`` and comes
  back in at the antipode of ``p``.

An empty word is a crossing-free circle.  Crossing signs are stored with
respect to the reference orientation (word order) and use the right-hand
rule: a crossing is positive when the under strand points 90 degrees
counterclockwise from the over strand.  The signs, together with the words,
fix the planar rotation system, so nothing else about the embedding needs to
be stored.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
import math

BND = -1
SEP = -(1 << 30)

__all__ = [
    "BND",
    "Diagram",
    "DiagramError",
    "PDGParseError",
    "PrimaryPair",
    "AffinePoint",
    "SelfCrossing",
    "BasedDiagram",
    "parse_pdg",
    "serialize_pdg",
    "diagram_to_json",
    "diagram_from_json",
    "validate",
    "validation_errors",
    "trace_faces",
    "canonical_code",
    "canonical_form",
    "standard_unlink",
    "standard_based",
]


class DiagramError(ValueError):
    """The diagram violates a structural or realizability invariant."""


class PDGParseError(ValueError):
    """The text is not a well-formed PDG file."""


def is_boundary(tok):
    return tok[0] == BND


class Diagram:
    """Immutable disk diagram.

    Parameters
    ----------
    nb : int
        Number of boundary positions (even).
    words : sequence of sequences of tokens
        One cyclic word per component.
    signs : dict
        Crossing id to +1 or -1.
    oriented : bool
        Whether the components carry an orientation.  The reference
        orientation (word order) always exists; for unoriented diagrams it is
        just bookkeeping.
    names, labels : optional
        Component names and boundary labels used for file round trips.
    """

    __slots__ = ("nb", "words", "signs", "oriented", "names", "labels",
                 "_passes", "_bindex")

    def __init__(self, nb, words, signs, oriented=True, names=None, labels=None):
        self.nb = nb
        self.words = tuple(tuple(w) for w in words)
        self.signs = dict(signs)
        self.oriented = oriented
        self.names = tuple(names) if names is not None else None
        self.labels = tuple(labels) if labels is not None else None
        self._passes = None
        self._bindex = None

    # basic structure

    @property
    def half(self):
        return self.nb // 2

    def antipode(self, p):
        return (p + self.nb // 2) % self.nb

    @property
    def n_components(self):
        return len(self.words)

    @property
    def crossing_count(self):
        return len(self.signs)

    def component_names(self):
        if self.names is not None and len(self.names) == len(self.words):
            return self.names
        return tuple(f"K{i + 1}" for i in range(len(self.words)))

    def boundary_labels(self):
        if self.labels is not None and len(self.labels) == self.nb:
            return self.labels
        return tuple(f"p{i}" for i in range(self.nb))

    def passes(self):
        """``{cid: [(comp, index, over), ...]}`` in word order."""
        if self._passes is None:
            out = {}
            for c, w in enumerate(self.words):
                for i, t in enumerate(w):
                    if t[0] != BND:
                        out.setdefault(t[0], []).append((c, i, t[1]))
            self._passes = out
        return self._passes

    def boundary_index(self):
        """``{position: (comp, index, is_exit)}`` for every used position."""
        if self._bindex is None:
            out = {}
            for c, w in enumerate(self.words):
                for i, t in enumerate(w):
                    if t[0] == BND:
                        out[t[1]] = (c, i, True)
                        out[self.antipode(t[1])] = (c, i, False)
            self._bindex = out
        return self._bindex

    def boundary_passes(self, c):
        return sum(1 for t in self.words[c] if t[0] == BND)

    def homology(self, c):
        """0 for components contractible in RP^3, 1 otherwise."""
        return self.boundary_passes(c) % 2

    def is_affine(self):
        return self.nb == 0

    def crossing_components(self, cid):
        (c1, _, _), (c2, _, _) = self.passes()[cid]
        return c1, c2

    def is_self_crossing(self, cid):
        c1, c2 = self.crossing_components(cid)
        return c1 == c2

    def over_pass(self, cid):
        for p in self.passes()[cid]:
            if p[2]:
                return p
        raise DiagramError(f"crossing {cid} has no over pass")

    def writhe(self, c=None):
        """Sum of signs; of self-crossings of ``c`` when given."""
        if c is None:
            return sum(self.signs.values())
        return sum(s for x, s in self.signs.items()
                   if self.crossing_components(x) == (c, c))

    # equality is exact structural equality

    def _key(self):
        return (self.nb, self.words, tuple(sorted(self.signs.items())), self.oriented)

    def __eq__(self, other):
        if not isinstance(other, Diagram):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"Diagram(nb={self.nb}, words={self.words!r}, signs={self.signs!r}, oriented={self.oriented})"

    def replace(self, nb=None, words=None, signs=None, keep_names=False):
        return Diagram(
            self.nb if nb is None else nb,
            self.words if words is None else words,
            self.signs if signs is None else signs,
            self.oriented,
            self.names if keep_names else None,
            self.labels if (keep_names and nb is None) else None,
        )

    # surgeries

    def switch(self, cid):
        """Exchange over and under at ``cid``; the sign flips."""
        return self.switch_many((cid,))

    def switch_many(self, cids):
        cids = set(cids)
        if not cids:
            return self
        words = [tuple((t[0], 1 - t[1]) if t[0] in cids else t for t in w)
                 for w in self.words]
        signs = {x: (-s if x in cids else s) for x, s in self.signs.items()}
        return self.replace(words=words, signs=signs, keep_names=True)

    def smooth_oriented(self, cid):
        """Orientation-respecting resolution of ``cid``."""
        (c1, i1, _), (c2, i2, _) = self.passes()[cid]
        signs = dict(self.signs)
        del signs[cid]
        words = list(self.words)
        if c1 != c2:
            a, b = words[c1], words[c2]
            merged = a[i1 + 1:] + a[:i1] + b[i2 + 1:] + b[:i2]
            rest = [w for k, w in enumerate(words) if k not in (c1, c2)]
            return self.replace(words=rest + [merged], signs=signs)
        w = words[c1]
        p1 = w[i1 + 1:i2]
        p2 = w[i2 + 1:] + w[:i1]
        rest = [u for k, u in enumerate(words) if k != c1]
        return self.replace(words=rest + [p1, p2], signs=signs)

    def _reversed_tokens(self, toks):
        h = self.nb // 2
        nb = self.nb
        return tuple((BND, (t[1] + h) % nb) if t[0] == BND else t for t in reversed(toks))

    def smooth_unoriented(self, cid):
        """The resolution of ``cid`` that does not respect the reference orientation.

        Part of the result runs against its old direction; signs of crossings
        with exactly one pass in the reversed part are negated.
        """
        (c1, i1, _), (c2, i2, _) = self.passes()[cid]
        words = list(self.words)
        if c1 != c2:
            a, b = words[c1], words[c2]
            a_rest = a[i1 + 1:] + a[:i1]
            b_rest = b[i2 + 1:] + b[:i2]
            flipped_part = b_rest
            merged = a_rest + self._reversed_tokens(b_rest)
            rest = [w for k, w in enumerate(words) if k not in (c1, c2)]
            new_words = rest + [merged]
        else:
            w = words[c1]
            p1 = w[i1 + 1:i2]
            p2 = w[i2 + 1:] + w[:i1]
            flipped_part = p2
            rest = [u for k, u in enumerate(words) if k != c1]
            new_words = rest + [p1 + self._reversed_tokens(p2)]
        count = {}
        for t in flipped_part:
            if t[0] != BND:
                count[t[0]] = count.get(t[0], 0) + 1
        signs = {x: (-s if count.get(x) == 1 else s)
                 for x, s in self.signs.items() if x != cid}
        return self.replace(words=new_words, signs=signs)

    def reverse_component(self, c):
        """Reverse the reference orientation of component ``c``."""
        words = list(self.words)
        words[c] = self._reversed_tokens(words[c])
        signs = {}
        for x, s in self.signs.items():
            a, b = self.crossing_components(x)
            signs[x] = -s if (a == c) != (b == c) else s
        return self.replace(words=words, signs=signs, keep_names=True)

    def delete_component(self, c):
        return self.delete_tokens(c, range(len(self.words[c])), drop_component=True)

    def delete_tokens(self, c, indices, drop_component=False):
        """Erase the tokens at ``indices`` of component ``c``.

        Crossings losing a pass disappear from the other strand as well, and
        released boundary positions are closed up.
        """
        indices = set(indices)
        w = self.words[c]
        gone = {w[i][0] for i in indices if w[i][0] != BND}
        freed = {w[i][1] for i in indices if w[i][0] == BND}
        words = []
        for k, u in enumerate(self.words):
            if k == c:
                if drop_component:
                    continue
                u = tuple(t for i, t in enumerate(u) if i not in indices)
            words.append(tuple(t for t in u if t[0] == BND or t[0] not in gone))
        signs = {x: s for x, s in self.signs.items() if x not in gone}
        if not freed:
            return self.replace(words=words, signs=signs)
        nb, words = _compact_boundary(self.nb, words)
        return self.replace(nb=nb, words=words, signs=signs)

    def without_components(self, comps):
        comps = set(comps)
        d = self
        for c in sorted(comps, reverse=True):
            d = d.delete_component(c)
        return d

    def relabeled_crossings(self):
        """Same diagram with crossing ids replaced by 1, 2, ... in word order."""
        mapping = {}
        for w in self.words:
            for t in w:
                if t[0] != BND and t[0] not in mapping:
                    mapping[t[0]] = len(mapping) + 1
        words = [tuple((mapping[t[0]], t[1]) if t[0] != BND else t for t in w)
                 for w in self.words]
        signs = {mapping[x]: s for x, s in self.signs.items()}
        return Diagram(self.nb, words, signs, self.oriented, self.names, self.labels)

    def as_unoriented(self):
        return Diagram(self.nb, self.words, self.signs, False, self.names, self.labels)

    def as_oriented(self):
        return Diagram(self.nb, self.words, self.signs, True, self.names, self.labels)

    def next_crossing_id(self):
        return max(self.signs, default=0) + 1


def _compact_boundary(nb, words):
    used = set()
    h = nb // 2
    for w in words:
        for t in w:
            if t[0] == BND:
                used.add(t[1])
                used.add((t[1] + h) % nb)
    order = sorted(used)
    index = {p: i for i, p in enumerate(order)}
    words = [tuple((BND, index[t[1]]) if t[0] == BND else t for t in w) for w in words]
    return len(order), words


# basepoints


@dataclass(frozen=True)
class PrimaryPair:
    """An antipodal pair crossed by a one-homologous component.

    ``token`` indexes the boundary token in the component's word.  The
    initial endpoint is where the component re-enters, i.e. the antipode of
    the token's exit position.
    """

    comp: int
    token: int


@dataclass(frozen=True)
class AffinePoint:
    """A point on a zero-homologous component just before token ``index``.

    ``direction`` is +1 to travel along the reference orientation and -1 to
    travel against it.
    """

    comp: int
    index: int
    direction: int = 1


@dataclass(frozen=True)
class SelfCrossing:
    """A self-crossing of a one-homologous component used as basepoint."""

    crossing: int
    direction: int = 1


@dataclass(frozen=True, eq=False)
class BasedDiagram:
    diagram: Diagram
    base: object


# rotation system and faces


def _dart_head(d, dart):
    kind = dart[0]
    if kind == "b":
        _, p, di = dart
        return ("P", (p + 1) % d.nb) if di > 0 else ("P", p)
    _, c, i, di = dart
    w = d.words[c]
    t = w[(i + 1) % len(w)] if di > 0 else w[i]
    if t[0] == BND:
        return ("P", t[1]) if di > 0 else ("P", d.antipode(t[1]))
    return ("X", t[0])


def rotation_system(d):
    """Outgoing darts at every vertex, in counterclockwise order.

    Darts are ``("s", comp, i, dir)`` for the arc segment from token ``i``
    to token ``i + 1`` (``dir`` +1 along the reference orientation) and
    ``("b", p, dir)`` for the boundary edge from ``p`` to ``p + 1``.
    """
    rot = {}
    for cid, ps in d.passes().items():
        over = [p for p in ps if p[2]]
        under = [p for p in ps if not p[2]]
        if len(over) != 1 or len(under) != 1:
            raise DiagramError(f"crossing {cid} must have one over and one under pass")
        (co, io, _), = over
        (cu, iu, _), = under
        lo, lu = len(d.words[co]), len(d.words[cu])
        oo = ("s", co, io, 1)
        oi = ("s", co, (io - 1) % lo, -1)
        uo = ("s", cu, iu, 1)
        ui = ("s", cu, (iu - 1) % lu, -1)
        if d.signs[cid] > 0:
            rot[("X", cid)] = [oo, uo, oi, ui]
        else:
            rot[("X", cid)] = [oo, ui, oi, uo]
    nb = d.nb
    for p, (c, i, is_exit) in d.boundary_index().items():
        if is_exit:
            arc = ("s", c, (i - 1) % len(d.words[c]), -1)
        else:
            arc = ("s", c, i, 1)
        rot[("P", p)] = [("b", p, 1), arc, ("b", (p - 1) % nb, -1)]
    return rot


def _reverse(dart):
    return dart[:-1] + (-dart[-1],)


def trace_faces(d, rot=None):
    """Faces as lists of darts; each face lies to the right of its darts.

    The outer face is ``("b", 0, 1), ("b", 1, 1), ...``; every other face
    meeting the boundary uses boundary darts of direction -1.
    """
    if rot is None:
        rot = rotation_system(d)
    where = {}
    for v, darts in rot.items():
        for k, dart in enumerate(darts):
            where[dart] = (v, k)
    seen = set()
    faces = []
    for start in where:
        if start in seen:
            continue
        face = []
        dart = start
        while dart not in seen:
            seen.add(dart)
            face.append(dart)
            back = _reverse(dart)
            v, k = where[back]
            ring = rot[v]
            dart = ring[(k + 1) % len(ring)]
        if dart != start:
            raise DiagramError("inconsistent rotation system")
        faces.append(face)
    return faces


def _edge_count_and_pieces(d, rot):
    parent = {v: v for v in rot}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    edges = set()
    for v, darts in rot.items():
        for dart in darts:
            e = dart[:-1]
            edges.add(e)
            h = _dart_head(d, dart)
            a, b = find(v), find(h)
            if a != b:
                parent[a] = b
    return edges, find


def validation_errors(d):
    """All violated invariants, most basic first.  Empty when valid."""
    errs = []
    labels = d.boundary_labels()
    if d.nb < 0 or d.nb % 2:
        return [f"boundary size {d.nb} is not a nonnegative even number"]
    used = {}
    for c, w in enumerate(d.words):
        for i, t in enumerate(w):
            if t[0] == BND:
                p = t[1]
                if not 0 <= p < d.nb:
                    errs.append(f"boundary position {p} out of range")
                    continue
                for q in (p, d.antipode(p)):
                    if q in used:
                        errs.append(f"boundary label '{labels[q]}' is used more than once")
                    used[q] = (c, i)
    if errs:
        return errs
    if len(used) != d.nb:
        missing = [labels[p] for p in range(d.nb) if p not in used]
        errs.append(f"boundary labels not used by any component: {', '.join(missing)}")
    passes = {}
    for c, w in enumerate(d.words):
        for i, t in enumerate(w):
            if t[0] != BND:
                passes.setdefault(t[0], []).append(t[1])
    for cid, ps in sorted(passes.items()):
        if len(ps) != 2:
            errs.append(f"crossing {cid} is traversed {len(ps)} times, expected 2")
        elif sorted(ps) != [0, 1]:
            errs.append(f"crossing {cid} must be passed once over and once under")
        if cid not in d.signs:
            errs.append(f"crossing {cid} has no sign")
        elif d.signs[cid] not in (1, -1):
            errs.append(f"crossing {cid} has sign {d.signs[cid]}, expected +1 or -1")
    for cid in sorted(set(d.signs) - set(passes)):
        errs.append(f"crossing {cid} has a sign but no passes")
    if errs:
        return errs
    rot = rotation_system(d)
    if not rot:
        return []
    faces = trace_faces(d, rot)
    edges, find = _edge_count_and_pieces(d, rot)
    stats = {}
    for v in rot:
        stats.setdefault(find(v), [0, 0, 0])[0] += 1
    for e in edges:
        # any vertex of the edge identifies its piece
        v = _edge_tail(d, e)
        stats[find(v)][1] += 1
    for f in faces:
        v = _edge_tail(d, f[0][:-1])
        stats[find(v)][2] += 1
    for vs, es, fs in stats.values():
        if vs - es + fs != 2:
            errs.append(f"not realizable: a connected piece has Euler characteristic {vs - es + fs}, expected 2")
            break
    return errs


def _edge_tail(d, edge):
    if edge[0] == "b":
        return ("P", edge[1])
    _, c, i = edge
    t = d.words[c][i]
    if t[0] == BND:
        return ("P", d.antipode(t[1]))
    return ("X", t[0])


def validate(d):
    """Raise ``DiagramError`` describing the first violated invariant."""
    errs = validation_errors(d)
    if errs:
        raise DiagramError(errs[0])
    return d


def is_valid(d):
    return not validation_errors(d)


# PDG text format

_CROSS_RE = re.compile(r"^C(-?\d+):([ou])([+-])$")


def parse_pdg(text):
    """Parse PDG text into a ``Diagram`` (not yet validated).

    Raises ``PDGParseError`` for malformed text and ``DiagramError`` for
    content errors that make the diagram meaningless (duplicate or unknown
    boundary labels, disagreeing crossing signs).
    """
    lines = []
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((n, line))
    if not lines:
        raise PDGParseError("empty input")
    n, head = lines[0]
    if head.split() != ["pdg", "1"]:
        raise PDGParseError(f"line {n}: expected header 'pdg 1'")
    if len(lines) < 2:
        raise PDGParseError("missing 'boundary' line")
    n, bline = lines[1]
    parts = bline.split()
    if parts[0] != "boundary":
        raise PDGParseError(f"line {n}: expected 'boundary' line")
    labels = parts[1:]
    index = {}
    for i, lab in enumerate(labels):
        if lab in index:
            raise DiagramError(f"boundary label '{lab}' is used more than once")
        index[lab] = i
    if len(labels) % 2:
        raise DiagramError(f"odd number of boundary labels ({len(labels)})")
    names, words, kinds = [], [], set()
    signs = {}
    for n, line in lines[2:]:
        if ":" not in line:
            raise PDGParseError(f"line {n}: expected 'component NAME oriented|unoriented : TOKENS'")
        head, _, body = line.partition(" :")
        if not _:
            head, _, body = line.partition(":")
        hp = head.split()
        if len(hp) != 3 or hp[0] != "component" or hp[2] not in ("oriented", "unoriented"):
            raise PDGParseError(f"line {n}: expected 'component NAME oriented|unoriented : TOKENS'")
        names.append(hp[1])
        kinds.add(hp[2])
        word = []
        for tok in body.split():
            m = _CROSS_RE.match(tok)
            if m:
                cid = int(m.group(1))
                sign = 1 if m.group(3) == "+" else -1
                if signs.setdefault(cid, sign) != sign:
                    raise DiagramError(f"crossing {cid} has disagreeing signs on its two passes")
                word.append((cid, 1 if m.group(2) == "o" else 0))
            elif tok.startswith("B") and len(tok) > 1:
                lab = tok[1:]
                if lab not in index:
                    raise DiagramError(f"boundary label '{lab}' is not declared")
                word.append((BND, index[lab]))
            else:
                raise PDGParseError(f"line {n}: bad token '{tok}'")
        words.append(tuple(word))
    if len(kinds) > 1:
        raise PDGParseError("components must be all oriented or all unoriented")
    oriented = kinds != {"unoriented"}
    if len(set(names)) != len(names):
        raise PDGParseError("component names must be distinct")
    return Diagram(len(labels), words, signs, oriented, names, labels)


def _token_str(d, t, labels):
    if t[0] == BND:
        return "B" + labels[t[1]]
    return f"C{t[0]}:{'o' if t[1] else 'u'}{'+' if d.signs[t[0]] > 0 else '-'}"


def serialize_pdg(d):
    labels = d.boundary_labels()
    kind = "oriented" if d.oriented else "unoriented"
    out = ["pdg 1", " ".join(["boundary", *labels])]
    for name, w in zip(d.component_names(), d.words):
        toks = " ".join(_token_str(d, t, labels) for t in w)
        out.append(f"component {name} {kind} : {toks}".rstrip())
    return "\n".join(out) + "\n"


def diagram_to_json(d):
    labels = d.boundary_labels()
    return {
        "format": "pdg",
        "version": 1,
        "boundary": list(labels),
        "components": [
            {"name": name, "oriented": d.oriented,
             "tokens": [_token_str(d, t, labels) for t in w]}
            for name, w in zip(d.component_names(), d.words)
        ],
    }


def diagram_from_json(data):
    if isinstance(data, str):
        data = json.loads(data)
    kind = {True: "oriented", False: "unoriented"}
    lines = ["pdg 1", " ".join(["boundary", *data["boundary"]])]
    for comp in data["components"]:
        lines.append(f"component {comp['name']} {kind[bool(comp['oriented'])]} : " + " ".join(comp["tokens"]))
    return parse_pdg("\n".join(lines))


# canonical codes


def _pieces(d):
    """Components grouped into connected pieces.

    Returns ``(boundary_piece, affine_pieces, free_circles)``; the boundary
    piece holds everything connected to a boundary pass.
    """
    parent = list(range(len(d.words)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for ps in d.passes().values():
        a, b = find(ps[0][0]), find(ps[1][0])
        if a != b:
            parent[a] = b
    groups = {}
    free = []
    bnd_roots = set()
    for c, w in enumerate(d.words):
        if not w:
            free.append(c)
            continue
        groups.setdefault(find(c), []).append(c)
        if any(t[0] == BND for t in w):
            bnd_roots.add(find(c))
    boundary = sorted(c for r in bnd_roots for c in groups[r])
    affine = [g for r, g in groups.items() if r not in bnd_roots]
    return boundary, affine, free


def _encode(d, comps, start_comp, start_idx, start_dir, unoriented):
    """Code of one piece read from a fixed start; see ``canonical_code``.

    Crossings are renamed in order of first appearance and boundary
    positions are measured from the first boundary token met.  When
    ``unoriented`` is set, each later component is read in whichever
    direction gives the smaller code; exact ties are explored.
    Returns the best ``(code, order)`` where ``order`` lists
    ``(comp, start, dir)``.
    """
    nb = d.nb
    h = nb // 2
    signs = d.signs
    words = d.words
    best = [None, None]

    def read(c, i, di, labels, dirs, off, out):
        w = words[c]
        L = len(w)
        out.append(SEP)
        for k in range(L):
            t = w[(i + di * k) % L]
            if t[0] == BND:
                p = t[1] if di > 0 else (t[1] + h) % nb
                if off is None:
                    off = p
                out.append(-1 - (p - off) % nb)
            else:
                lab = labels.get(t[0])
                if lab is None:
                    labels[t[0]] = len(labels)
                    out.append(8 * len(labels) - 8 + 2 * t[1])
                else:
                    s = signs[t[0]]
                    other = dirs.get(("x", t[0]), di)
                    s = s * di * other
                    out.append(8 * lab + 4 + 2 * t[1] + (s > 0))
                    continue
                dirs[("x", t[0])] = di
        return off

    def pick_next(visited, labels, off):
        key = None
        choice = None
        for c in comps:
            if c in visited:
                continue
            for j, t in enumerate(words[c]):
                if t[0] == BND:
                    if off is None:
                        continue
                    a = (t[1] - off) % nb
                    b = (t[1] + h - off) % nb
                    k = (1, min(a, b))
                else:
                    lab = labels.get(t[0])
                    if lab is None:
                        continue
                    k = (0, lab)
                if key is None or k < key:
                    key, choice = k, (c, j)
        return choice

    def extend(visited, labels, dirs, off, out, order):
        if best[0] is not None and _worse_prefix(out, best[0]):
            return
        nxt = pick_next(visited, labels, off)
        if nxt is None:
            if len(visited) == len(comps):
                code = tuple(out)
                if best[0] is None or code < best[0]:
                    best[0], best[1] = code, list(order)
            return
        c, j = nxt
        options = (1, -1) if unoriented else (1,)
        branches = []
        for di in options:
            lab2, dirs2, out2 = dict(labels), dict(dirs), list(out)
            off2 = read(c, j, di, lab2, dirs2, off, out2)
            branches.append((out2, di, lab2, dirs2, off2))
        least = min(b[0] for b in branches)
        for out2, di, lab2, dirs2, off2 in branches:
            if out2 == least:
                extend(visited | {c}, lab2, dirs2, off2, out2, order + [(c, j, di)])

    labels, dirs, out = {}, {}, []
    off = read(start_comp, start_idx, start_dir, labels, dirs, None, out)
    extend({start_comp}, labels, dirs, off, out, [(start_comp, start_idx, start_dir)])
    return best[0], best[1]


def _worse_prefix(out, best):
    # True when the partial code ``out`` already compares greater than ``best``
    n = min(len(out), len(best))
    for a, b in zip(out[:n], best[:n]):
        if a != b:
            return a > b
    return False


def _piece_code(d, comps, unoriented, with_boundary):
    if with_boundary:
        # the boundary is only relabelled by the antipodal shift, so the
        # piece is always read from the token owning position 0
        c0, j0, _ = d.boundary_index()[0]
        starts = [(c0, j0)]
    else:
        starts = [(c, j) for c in comps for j in range(len(d.words[c]))]
    best = None
    best_order = None
    for c, j in starts:
        for di in ((1, -1) if unoriented else (1,)):
            code, order = _encode(d, comps, c, j, di, unoriented)
            if best is None or code < best:
                best, best_order = code, order
    return best, best_order


def canonical_code(d, unoriented=None):
    """Isomorphism-invariant key of a diagram.

    Two diagrams get the same code exactly when they differ by renaming
    crossings, reordering components, moving the start of each word,
    shifting boundary labels by the antipodal step and moving split pieces
    between faces;
    with ``unoriented`` also by reversing the reference orientation of
    components.  Defaults to unoriented for unoriented diagrams.
    """
    return _canonical(d, unoriented)[0]


def canonical_form(d, unoriented=None):
    """``(code, diagram)`` with the diagram rebuilt from the code."""
    return _canonical(d, unoriented)


def _canonical(d, unoriented):
    if unoriented is None:
        unoriented = not d.oriented
    boundary, affine, free = _pieces(d)
    bcode = ()
    if boundary:
        bcode, _ = _piece_code(d, boundary, unoriented, True)
    acodes = sorted(_piece_code(d, g, unoriented, False)[0] for g in affine)
    key = (bool(unoriented), d.nb, bcode, tuple(acodes), len(free))
    return key, _decode(key, d.oriented)


def _decode(key, oriented):
    _, nb, bcode, acodes, nfree = key
    words = []
    signs = {}
    base = 0
    for code in (bcode, *acodes):
        if not code:
            continue
        top = 0
        word = None
        for v in code:
            if v == SEP:
                if word is not None:
                    words.append(tuple(word))
                word = []
            elif v < 0:
                word.append((BND, -1 - v))
            else:
                lab = base + (v >> 3) + 1
                top = max(top, v >> 3)
                word.append((lab, (v >> 1) & 1))
                if v & 4:
                    signs[lab] = 1 if v & 1 else -1
        words.append(tuple(word))
        base += top + 1
    words.extend(() for _ in range(nfree))
    return Diagram(nb, words, signs, oriented)


# standard diagrams


def _circle_point(theta):
    """Rational point on the unit circle close to angle ``theta``."""
    t = Fraction(math.tan(theta / 2)).limit_denominator(10 ** 6)
    den = 1 + t * t
    return ((1 - t * t) / den, 2 * t / den)


def _chord_geometry(n):
    # perturbed positions keep the cyclic order but avoid triple points
    pts = []
    for j in range(2 * n):
        wobble = 0.3 * ((j * 7919) % 13) / 13
        theta = math.pi * (j + 0.25 + wobble) / n
        pts.append(_circle_point(theta))
    return pts


def _segment_params(p1, p2, q1, q2):
    # solve p1 + t (p2 - p1) = q1 + u (q2 - q1)
    dx, dy = p2[0] - p1[0], p2[1] - p1[1]
    ex, ey = q2[0] - q1[0], q2[1] - q1[1]
    det = dx * (-ey) - dy * (-ex)
    if det == 0:
        return None
    rx, ry = q1[0] - p1[0], q1[1] - p1[1]
    t = (rx * (-ey) - ry * (-ex)) / det
    u = (dx * ry - dy * rx) / det
    return t, u


def _chord_diagram(n, reversed_chords=(), oriented=True):
    """Chords ``1..n``; chord ``i`` joins positions ``i-1`` and ``i-1+n``.

    Chord ``i`` lies above chord ``j`` whenever ``i < j``.  Chords in
    ``reversed_chords`` run from ``i-1+n`` to ``i-1``.
    """
    if n == 0:
        return Diagram(0, [()], {}, oriented)
    pts = _chord_geometry(n)
    ends = []
    for i in range(1, n + 1):
        a, b = pts[i - 1], pts[i - 1 + n]
        if i in reversed_chords:
            a, b = b, a
        ends.append((a, b))
    hits = {i: [] for i in range(n)}
    signs = {}
    cid = 0
    for i in range(n):
        for j in range(i + 1, n):
            (a1, a2), (b1, b2) = ends[i], ends[j]
            t, u = _segment_params(a1, a2, b1, b2)
            if not (0 < t < 1 and 0 < u < 1):
                raise AssertionError("long chords must cross")
            cid += 1
            hits[i].append((t, cid, 1))
            hits[j].append((u, cid, 0))
            do = (a2[0] - a1[0], a2[1] - a1[1])
            du = (b2[0] - b1[0], b2[1] - b1[1])
            cross = do[0] * du[1] - do[1] * du[0]
            signs[cid] = 1 if cross > 0 else -1
    words = []
    for i in range(n):
        hs = sorted(hits[i])
        if len({t for t, _, _ in hs}) != len(hs):
            raise AssertionError("triple point in chord arrangement")
        exit_pos = (i + n) % (2 * n) if (i + 1) not in reversed_chords else i
        words.append(tuple((c, o) for _, c, o in hs) + ((BND, exit_pos),))
    return Diagram(2 * n, words, signs, oriented)


def standard_unlink(n, oriented=True):
    """The standard diagram of the n-component unlink of projective lines.

    ``n = 0`` gives a single crossing-free affine circle.  All crossings are
    positive.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _chord_diagram(n, (), oriented)


def standard_based(k, l):
    """Standard diagram with ``k`` good and ``l`` bad components.

    Good components are chords ``1..k`` in their forward direction, bad
    ones are chords ``k+1..k+l`` reversed.  The primary basepoint sits on
    chord 1.  Returns a ``BasedDiagram``.
    """
    if k < 1 or l < 0:
        raise ValueError("need k >= 1 and l >= 0")
    n = k + l
    d = _chord_diagram(n, set(range(k + 1, n + 1)), True)
    return BasedDiagram(d, PrimaryPair(0, len(d.words[0]) - 1))
