import pytest

from rp3skein.diagram import canonical_code, standard_unlink, validation_errors
from rp3skein.moves import (
    EXPAND,
    REDUCE,
    MoveError,
    MoveSite,
    apply_move,
    find_sites,
    graft_kink,
    kink_factor_exponent,
    random_diagram,
)
from rp3skein.homfly import homfly


def test_every_site_gives_a_valid_diagram():
    kinds = set()
    for seed in range(25):
        d = random_diagram(seed, 5, num_projective=1 + seed % 3, num_affine=seed % 2)
        for s in find_sites(d):
            d2 = apply_move(d, s)
            assert validation_errors(d2) == [], s
            assert d2.crossing_count == d.crossing_count + s.crossing_delta
            kinds.add((s.kind, s.direction))
    assert {k for k, _ in kinds} == {"O1", "O2", "O3", "O4", "O5"}


def test_sites_on_standard_unlink():
    kinds = {s.kind for s in find_sites(standard_unlink(2))}
    assert "O4" in kinds and "O1" in kinds


def test_o4_on_affine_circle_adds_boundary():
    d = standard_unlink(0)
    s = next(s for s in find_sites(d) if s.kind == "O4")
    d2 = apply_move(d, s)
    assert d2.nb == 4 and validation_errors(d2) == []


def test_kink_round_trip():
    d = random_diagram(3, 4, 2)
    k = graft_kink(d, 0, 0, 1)
    reduce = [s for s in find_sites(k) if s.kind == "O1" and s.direction == REDUCE]
    assert any(canonical_code(apply_move(k, s)) == canonical_code(d) for s in reduce)


def test_kink_factor_exponent():
    d = standard_unlink(2)
    s = next(s for s in find_sites(d) if s.kind == "O1" and s.direction == EXPAND)
    w = kink_factor_exponent(s, d)
    assert abs(w) == 1
    assert homfly(apply_move(d, s)) == homfly(d).shift(x=w, v=-w)


def test_bad_site_rejected():
    with pytest.raises(MoveError):
        apply_move(standard_unlink(2), MoveSite("O3", "slide", ((0, 0), (1, 1), (2, 2))))


def test_random_diagram_deterministic():
    a = random_diagram(42, 6, 2, 1)
    b = random_diagram(42, 6, 2, 1)
    assert a == b
    assert a.crossing_count <= 6


def test_random_affine_stays_affine():
    for seed in range(10):
        d = random_diagram(seed, 5, 0, 2, max_boundary=0)
        assert d.nb == 0
