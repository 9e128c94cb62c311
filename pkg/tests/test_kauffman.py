import pytest

from rp3skein.checks import affine_corpus, corpus
from rp3skein.descend import admissible_basepoints
from rp3skein.diagram import Diagram, standard_unlink
from rp3skein.kauffman import KauffmanEvaluator, compute_kauffman, kauffman
from rp3skein.moves import graft_kink
from rp3skein.oracle import classical_kauffman, figure_eight, hopf_link, trefoil
from rp3skein.ring import KauffmanValue, delta


@pytest.mark.parametrize("n", range(1, 7))
def test_standard_unlink_values(n):
    d = standard_unlink(n, oriented=False)
    assert kauffman(d) == KauffmanValue.monomial(y=n)
    assert compute_kauffman(d).affinity_bound == n


def test_unknot_and_empty():
    assert kauffman(standard_unlink(0, False)) == delta()
    assert kauffman(Diagram(0, [], {}, False)) == KauffmanValue.one()


def test_orientation_ignored():
    for d in corpus(11, 10, 4):
        assert kauffman(d) == kauffman(d.as_unoriented())
        assert kauffman(d.reverse_component(0)) == kauffman(d)


@pytest.mark.parametrize("d", [trefoil(), figure_eight(), hopf_link(), hopf_link(-1)])
def test_affine_matches_oracle(d):
    assert kauffman(d) == delta() * classical_kauffman(d)


def test_affine_corpus_matches_oracle():
    for d in affine_corpus(102, 15, 6):
        assert kauffman(d) == delta() * classical_kauffman(d)


def test_skein_relation_on_corpus():
    ev = KauffmanEvaluator()
    for d in corpus(203, 15, 5):
        u = d.as_unoriented()
        for x in u.signs:
            lhs = ev(u) + ev(u.switch(x))
            assert lhs == (ev(u.smooth_oriented(x)) + ev(u.smooth_unoriented(x))).shift(z=1)


def test_kink_factor():
    for d in corpus(304, 10, 4):
        assert kauffman(graft_kink(d, 0, 0, 1)) == kauffman(d).shift(a=1)


def test_memo_flag():
    for d in corpus(405, 10, 5):
        assert kauffman(d, memo=True) == kauffman(d, memo=False)


def test_projective_basepoint_dependence_on_two_lines():
    """The literal recursion depends on which line carries the basepoint.

    On the standard two-line diagram the two primary pairs give y^2 and
    -y^2 + 2 z d.  The skein relation at the crossing forces the value z d for any
    rule invariant under rotating the disk, so neither choice is
    rotation-invariant.
    """
    d = standard_unlink(2, oriented=False)
    ev = KauffmanEvaluator(memo=False)
    values = sorted((str(ev.evaluate_based(b)) for b in admissible_basepoints(d)))
    assert KauffmanValue.monomial(y=2) in [ev.evaluate_based(b) for b in admissible_basepoints(d)]
    other = KauffmanValue.monomial(-1, y=2) + (delta() * 2).shift(z=1)
    assert other in [ev.evaluate_based(b) for b in admissible_basepoints(d)]
    assert len(set(values)) == 2
    # the canonical choice reproduces the stated golden value
    assert kauffman(d) == KauffmanValue.monomial(y=2)


def test_projective_move_changes_value():
    """An Omega-2 push on a one-crossing projective diagram changes K but not H.

    The two values are the same pair seen on the two-line diagram, which is
    the basepoint dependence showing up as a move failure.
    """
    from rp3skein.diagram import parse_pdg
    from rp3skein.homfly import homfly
    from rp3skein.moves import MoveSite, apply_move

    d = parse_pdg("pdg 1\nboundary p0 p1 p2 p3 p4 p5 p6 p7\n"
                  "component K1 oriented : C1:u- Bp6 Bp3 Bp0\n"
                  "component K2 oriented : C1:o- Bp1\n")
    site = MoveSite("O2", "expand", (("s", 0, 3, -1), ("s", 0, 1, -1), 1))
    e = apply_move(d, site)
    assert homfly(e) == homfly(d)
    assert kauffman(e) == KauffmanValue.monomial(y=2)
    assert kauffman(d) == KauffmanValue.monomial(-1, y=2) + (delta() * 2).shift(z=1)


def test_affine_moves_preserve_value():
    from rp3skein.moves import apply_move, find_sites, kink_factor_exponent

    for d in affine_corpus(606, 8, 4):
        k = kauffman(d)
        for s in find_sites(d):
            if s.kind == "O4":
                continue
            assert kauffman(apply_move(d, s)) == k.shift(a=kink_factor_exponent(s, d))
