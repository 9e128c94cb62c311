import pytest

from rp3skein.descend import (
    AFFINE_BASE,
    NO_CROSSINGS,
    SELF_CROSS_BASE,
    SIMPLE,
    ArcPoint,
    admissible_basepoints,
    arc_distance,
    canonical_basepoint,
    canonically_oriented,
    classify,
    frame,
    is_almost_standard,
    is_descending,
    strip_trivial_components,
    switch_plan,
)
from rp3skein.diagram import BND, Diagram, PrimaryPair, standard_based, standard_unlink
from rp3skein.oracle import kinked_unknot, trefoil


def test_classify():
    assert classify(standard_unlink(0)) == NO_CROSSINGS
    assert classify(standard_unlink(3)) == SIMPLE
    assert classify(trefoil()) == AFFINE_BASE
    # one projective line with a kink: only self-crossings of a 1-homologous component
    d = Diagram(2, [((1, 1), (1, 0), (BND, 0))], {1: 1})
    assert classify(d) == SELF_CROSS_BASE


@pytest.mark.parametrize("k,l", [(1, 0), (2, 1), (1, 2), (3, 1)])
def test_frame_of_standard_based(k, l):
    fr = frame(standard_based(k, l))
    assert (fr.k, fr.l) == (k, l)
    assert fr.order[0] == 0


def test_standard_based_is_almost_standard():
    assert is_almost_standard(standard_based(2, 1))
    assert switch_plan(standard_based(2, 1)) == ()


def test_canonical_basepoint_owns_position_zero():
    d = standard_unlink(4)
    bd = canonical_basepoint(d)
    c, i, _ = d.boundary_index()[0]
    assert bd.base == PrimaryPair(c, i)


def test_admissible_basepoints_count():
    d = standard_unlink(3)
    assert len(admissible_basepoints(d)) == 3
    assert all(isinstance(b.base, PrimaryPair) for b in admissible_basepoints(d))


def test_arc_distance_counts_boundary_passes():
    d = standard_unlink(2)
    w = d.words[0]
    p = ArcPoint(0, 0)
    q = ArcPoint(0, len(w) - 1)
    assert arc_distance(d, p, q) in (0, 1)


def test_strip_trivial_components():
    d = Diagram(2, [((BND, 0),), (), ()], {})
    e, n = strip_trivial_components(d)
    assert n == 2 and e.n_components == 1


def test_descending_stack():
    d = kinked_unknot(1)
    assert is_descending(d, ArcPoint(0, 0), ArcPoint(0, 0)) or \
        is_descending(d, ArcPoint(0, 1), ArcPoint(0, 1))


def test_canonically_oriented_starts_each_line_entering():
    d = standard_unlink(3, oriented=False)
    for bd in admissible_basepoints(d):
        out = canonically_oriented(bd)
        idx = out.diagram.boundary_index()
        firsts = {}
        for p in sorted(idx):
            c, _, is_exit = idx[p]
            firsts.setdefault(c, is_exit)
        assert not any(firsts.values())
        assert out.diagram.words[out.base.comp][out.base.token][0] == BND
