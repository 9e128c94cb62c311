import random

import pytest

from rp3skein.diagram import (
    BND,
    Diagram,
    DiagramError,
    PDGParseError,
    canonical_code,
    diagram_from_json,
    diagram_to_json,
    is_valid,
    parse_pdg,
    serialize_pdg,
    standard_based,
    standard_unlink,
    trace_faces,
    validation_errors,
)
from rp3skein.moves import random_diagram
from rp3skein.oracle import figure_eight, hopf_link, trefoil


@pytest.mark.parametrize("n", range(0, 7))
def test_standard_unlink_valid(n):
    d = standard_unlink(n)
    assert is_valid(d)
    assert d.n_components == max(n, 1)
    assert d.crossing_count == n * (n - 1) // 2
    assert all(d.homology(c) == (1 if n else 0) for c in range(d.n_components))


@pytest.mark.parametrize("k,l", [(1, 0), (1, 1), (2, 1), (1, 3), (3, 2)])
def test_standard_based_valid(k, l):
    bd = standard_based(k, l)
    assert is_valid(bd.diagram)
    assert bd.diagram.n_components == k + l


@pytest.mark.parametrize("d", [trefoil(), figure_eight(), hopf_link(), hopf_link(-1)])
def test_named_affine_diagrams_valid(d):
    assert validation_errors(d) == []
    assert d.is_affine


def test_nonplanar_signs_rejected():
    d = trefoil()
    bad = d.replace(signs={1: 1, 2: 1, 3: -1})
    assert not is_valid(bad)


def test_pdg_round_trip():
    text = serialize_pdg(standard_unlink(3))
    d = parse_pdg(text)
    assert serialize_pdg(d) == text
    assert canonical_code(d) == canonical_code(standard_unlink(3))


def test_pdg_round_trip_random():
    for seed in range(40):
        d = random_diagram(seed, 6, num_projective=seed % 3, num_affine=seed % 2)
        e = parse_pdg(serialize_pdg(d))
        assert canonical_code(e) == canonical_code(d)
        assert canonical_code(diagram_from_json(diagram_to_json(d))) == canonical_code(d)


@pytest.mark.parametrize("text", ["", "pdg 2\n", "pdg 1\nboundary p0 p1\ncomponent K1 sideways : \n",
                                  "pdg 1\nboundary p0 p1\ncomponent K1 oriented : C1:x+\n"])
def test_parse_errors(text):
    with pytest.raises(PDGParseError):
        parse_pdg(text)


def test_reused_boundary_label_named():
    text = ("pdg 1\nboundary p0 p1 p2 p3\n"
            "component K1 oriented : C1:o+ Bp2\ncomponent K2 oriented : C1:u+ Bp2\n")
    d = parse_pdg(text)
    errs = validation_errors(d)
    assert any("'p2'" in e for e in errs)


def test_canonical_code_ignores_crossing_names():
    d = random_diagram(5, 5, 2, 1)
    ren = {x: 100 + 7 * x for x in d.signs}
    words = [tuple((ren[t[0]], t[1]) if t[0] != BND else t for t in w) for w in d.words]
    e = Diagram(d.nb, words, {ren[x]: s for x, s in d.signs.items()}, d.oriented)
    assert canonical_code(e) == canonical_code(d)


def test_canonical_code_ignores_component_order_and_rotation():
    d = random_diagram(8, 5, 1, 2)
    rng = random.Random(0)
    words = list(d.words)
    rng.shuffle(words)
    words = [w[len(w) // 2:] + w[:len(w) // 2] if w and all(t[0] != BND for t in w) else w
             for w in words]
    assert canonical_code(d.replace(words=words)) == canonical_code(d)


def test_canonical_code_antipodal_shift():
    d = standard_unlink(3)
    h = d.nb // 2
    words = [tuple((BND, (t[1] + h) % d.nb) if t[0] == BND else t for t in w) for w in d.words]
    assert canonical_code(d.replace(words=words)) == canonical_code(d)


def test_canonical_code_sees_signs():
    d = hopf_link(1)
    assert canonical_code(d) != canonical_code(hopf_link(-1))


def test_switch_and_smoothings():
    d = trefoil()
    s = d.switch(1)
    assert s.signs[1] == -1 and s.over_pass(1) != d.over_pass(1)
    o = d.smooth_oriented(1)
    assert o.crossing_count == 2 and o.n_components == 2
    u = d.as_unoriented().smooth_unoriented(1)
    assert u.crossing_count == 2 and u.n_components == 1


def test_faces_euler():
    d = standard_unlink(3)
    faces = trace_faces(d)
    assert faces


def test_odd_boundary_rejected():
    d = Diagram(3, [()], {})
    assert any("boundary size 3" in e for e in validation_errors(d))
    from rp3skein.diagram import validate
    with pytest.raises(DiagramError):
        validate(d)
