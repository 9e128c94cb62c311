import json

import pytest

from rp3skein.cli import main
from rp3skein.descend import canonical_basepoint, frame
from rp3skein.diagram import canonical_code, parse_pdg, serialize_pdg, standard_unlink
from rp3skein.oracle import trefoil


@pytest.fixture
def run(capsys):
    def go(*argv):
        code = main(list(argv))
        out = capsys.readouterr()
        return code, out.out, out.err
    return go


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_validate_ok(run, tmp_path):
    f = write(tmp_path, "l3.pdg", serialize_pdg(standard_unlink(3)))
    code, out, _ = run("validate", f)
    assert code == 0 and "ok" in out
    code, out, _ = run("validate", "--json", f)
    assert json.loads(out)["valid"] is True


def test_validate_reused_label(run, tmp_path):
    f = write(tmp_path, "bad.pdg", "pdg 1\nboundary p0 p1 p2 p3\n"
              "component K1 oriented : C1:o+ Bp2\ncomponent K2 oriented : C1:u+ Bp2\n")
    code, _, err = run("validate", f)
    assert code == 1 and "'p2'" in err


def test_validate_truncated(run, tmp_path):
    text = serialize_pdg(standard_unlink(3))
    f = write(tmp_path, "cut.pdg", text[: text.index("C2:") + 3])
    assert run("validate", f)[0] == 2
    assert run("validate", str(tmp_path / "missing.pdg"))[0] == 2


def test_compute_l2(run, tmp_path):
    f = write(tmp_path, "l2.pdg", serialize_pdg(standard_unlink(2)))
    code, out, _ = run("compute", f)
    assert code == 0
    assert "H = z^2" in out and "K = y^2" in out
    assert "H affinity bound: 2" in out and "K affinity bound: 2" in out
    data = json.loads(run("compute", "--json", f)[1])
    assert data["homfly"]["text"] == "z^2" and data["kauffman"]["affinity_bound"] == 2
    assert data["homfly"]["value"]["denom_power"] == 0


def test_compute_unknot_prints_fraction(run, tmp_path):
    f = write(tmp_path, "u.pdg", serialize_pdg(standard_unlink(0)))
    out = run("compute", "--invariant", "homfly", f)[1]
    assert "H = (v^-1 - v)/(s - s^-1)" in out
    data = json.loads(run("compute", "--json", "--invariant", "homfly", f)[1])
    assert data["homfly"]["value"]["denom_power"] == 1


def test_compute_trefoil_golden(run, tmp_path):
    f = write(tmp_path, "t.pdg", serialize_pdg(trefoil()))
    out = run("compute", f)[1]
    from rp3skein.oracle import classical_homfly, classical_kauffman
    from rp3skein.ring import delta, mu
    assert f"H = {mu() * classical_homfly(trefoil())}" in out
    assert f"K = {delta() * classical_kauffman(trefoil())}" in out


def test_compute_homfly_needs_orientation(run, tmp_path):
    f = write(tmp_path, "u.pdg", serialize_pdg(standard_unlink(2, oriented=False)))
    code, _, err = run("compute", "--invariant", "homfly", f)
    assert code == 1 and "oriented" in err
    code, out, _ = run("compute", f)
    assert code == 0 and "K = y^2" in out and "H =" not in out


def test_bound(run, tmp_path):
    f = write(tmp_path, "l4.pdg", serialize_pdg(standard_unlink(4)))
    code, out, _ = run("bound", f)
    assert code == 0 and "distance from affinity >= 4" in out


def test_gen_unlink(run, tmp_path):
    out = tmp_path / "g.pdg"
    assert run("gen", "--unlink", "3", "-o", str(out))[0] == 0
    d = parse_pdg(out.read_text())
    assert canonical_code(d) == canonical_code(standard_unlink(3))
    code, text, _ = run("compute", "--invariant", "homfly", str(out))
    assert "H = z^3" in text
    code, text, _ = run("gen", "--unlink", "0")
    d = parse_pdg(text)
    assert d.n_components == 1 and d.nb == 0 and not d.signs


def test_gen_standard_frame(run):
    _, text, _ = run("gen", "--standard", "2", "1")
    fr = frame(canonical_basepoint(parse_pdg(text)))
    assert (fr.k, fr.l) == (2, 1)


def test_gen_bad_params(run):
    assert run("gen", "--standard", "0", "1")[0] == 1
    assert run("gen", "--unlink", "-1")[0] == 1


def test_explain(run, tmp_path):
    f = write(tmp_path, "s.pdg", run("gen", "--standard", "1", "2")[1])
    data = json.loads(run("explain", f)[1])
    assert data["case"] == "simple" and data["frame"]["k"] == 1 and data["frame"]["l"] == 2


def test_check_passes(run):
    code, out, _ = run("check", "--suite", "skein", "--seed", "7", "--iters", "5",
                       "--max-crossings", "4")
    assert code == 0 and "all checks passed" in out


def test_check_rejects_nonpositive(run):
    with pytest.raises(SystemExit):
        run("check", "--suite", "skein", "--iters", "0")


def test_check_detects_sign_flip(run, tmp_path, monkeypatch):
    import rp3skein.homfly as hm
    from rp3skein.ring import sigma
    monkeypatch.setattr(hm, "sigma", lambda: -sigma())
    code, out, _ = run("check", "--suite", "skein", "--seed", "7", "--iters", "10",
                       "--max-crossings", "4", "--invariant", "homfly",
                       "--dump", str(tmp_path / "dump"))
    assert code == 1
    dumps = sorted((tmp_path / "dump").iterdir())
    assert dumps
    parse_pdg(dumps[0].read_text())
    code, out, _ = run("check", "--suite", "skein", "--seed", "7", "--iters", "10",
                       "--max-crossings", "4", "--invariant", "homfly", "--show", "1")
    assert code == 1 and "pdg 1" in out
