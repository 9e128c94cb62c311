import pytest

from rp3skein.diagram import DiagramError, standard_unlink
from rp3skein.oracle import (
    affine_unlink,
    classical_homfly,
    classical_kauffman,
    figure_eight,
    hopf_link,
    kinked_unknot,
    trefoil,
    unknot,
)
from rp3skein.ring import HomflyValue, KauffmanValue, LaurentPoly, KAUFFMAN_VARS, delta, mu


def kpoly(terms):
    return KauffmanValue(LaurentPoly(KAUFFMAN_VARS, terms))


def test_unknot_normalization():
    assert classical_homfly(unknot()) == HomflyValue.one()
    assert classical_kauffman(unknot()) == KauffmanValue.one()


def test_kinks():
    assert classical_homfly(kinked_unknot(1)) == HomflyValue.monomial(x=1, v=-1)
    assert classical_homfly(kinked_unknot(-1)) == HomflyValue.monomial(x=-1, v=1)
    assert classical_kauffman(kinked_unknot(1)) == KauffmanValue.monomial(a=1)


def test_split_unlink():
    assert classical_homfly(affine_unlink(2)) == mu()
    assert classical_kauffman(affine_unlink(3)) == delta() ** 2


def test_trefoil_kauffman_polynomial():
    # F = a^-w L for the right-handed trefoil (w = 3)
    f = classical_kauffman(trefoil()).shift(a=-3)
    expected = kpoly({(-2, 0, 0): -2, (-4, 0, 0): -1, (-3, 1, 0): 1, (-5, 1, 0): 1,
                      (-2, 2, 0): 1, (-4, 2, 0): 1})
    assert f == expected


def test_trefoil_homfly_polynomial():
    # unframed: 2v^2 + v^2 z^2 - v^4 with z = s - s^-1
    p = classical_homfly(trefoil()).shift(x=-3, v=3)
    expected = (HomflyValue.monomial(v=2, s=2) + HomflyValue.monomial(v=2, s=-2)
                - HomflyValue.monomial(v=4))
    assert p == expected


def test_figure_eight_is_amphichiral():
    f = classical_kauffman(figure_eight())
    mirror = KauffmanValue(LaurentPoly(KAUFFMAN_VARS, {(-e[0], e[1], e[2]): c
                                                       for e, c in f.poly.terms.items()}))
    assert f == mirror
    assert f.deg_in("z") == 3


def test_hopf_link_skein():
    # H(D+) - x^2 H(D-) = x (s - s^-1) H(D0) at one crossing of the positive Hopf link
    from rp3skein.ring import sigma
    d = hopf_link(1)
    lhs = classical_homfly(d) - classical_homfly(d.switch(1)).shift(x=2)
    assert lhs == (sigma() * classical_homfly(d.smooth_oriented(1))).shift(x=1)


def test_rejects_projective():
    with pytest.raises(DiagramError):
        classical_homfly(standard_unlink(2))
    with pytest.raises(DiagramError):
        classical_kauffman(standard_unlink(1, False))
