from __future__ import annotations

import json

import pytest

from surfcat.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture()
def hexagon_file(tmp_path, capsys):
    path = tmp_path / "hexagon.json"
    code, out, _ = run(capsys, "fixture", "polygon6")
    path.write_text(out)
    return str(path)


@pytest.fixture()
def annulus_file(tmp_path, capsys):
    path = tmp_path / "annulus.json"
    code, out, _ = run(capsys, "fixture", "example-annulus")
    path.write_text(out)
    return str(path)


def test_validate(capsys, hexagon_file):
    code, out, _ = run(capsys, "validate", hexagon_file)
    assert code == 0
    assert json.loads(out) == {"ok": True, "internal_arcs": 3}


def test_outputs_are_stable(capsys, annulus_file):
    code1, out1, _ = run(capsys, "qp", annulus_file)
    code2, out2, _ = run(capsys, "qp", annulus_file)
    assert code1 == code2 == 0
    assert out1 == out2


def test_qp_fields(capsys, annulus_file):
    _, out, _ = run(capsys, "qp", annulus_file)
    doc = json.loads(out)
    assert doc["vertices"] == [1, 2, 3, 4, 5]
    assert len(doc["arrows"]) == 6
    assert len(doc["potential_cycles"]) == 1


def test_qp_dot(capsys, annulus_file):
    _, out, _ = run(capsys, "qp", "--dot", annulus_file)
    assert out.startswith("// potential: (")


def test_ext_of_arc_with_itself(capsys, annulus_file):
    code, out, _ = run(capsys, "ext", "--from", "arc:1", "--to", "arc:1",
                       annulus_file)
    assert code == 0 and json.loads(out) == {"dim": 0}


def test_hom_example(capsys, annulus_file):
    code, out, _ = run(capsys, "hom", "--from", "w:13,-10,9,3", "--to",
                       "w:-10,9,3,15", annulus_file)
    assert code == 0 and json.loads(out) == {"dim": 2}


def test_unknown_arc_flip(capsys, annulus_file):
    code, out, err = run(capsys, "flip", "--arc", "99", annulus_file)
    assert code == 1
    doc = json.loads(err)
    assert doc["error"] == "UnknownArc"


def test_boundary_flip_error(capsys, annulus_file):
    code, _, err = run(capsys, "flip", "--arc", "6", annulus_file)
    assert code == 1
    assert json.loads(err)["error"] == "BoundaryArcFlip"


def test_flip_roundtrip_structure(capsys, annulus_file, tmp_path):
    code, out, _ = run(capsys, "flip", "--arc", "5", annulus_file)
    doc = json.loads(out)
    assert doc["new_arc"] == 11
    f2 = tmp_path / "flipped.json"
    f2.write_text(json.dumps(doc["triangulation"]))
    code, out, _ = run(capsys, "flip-path", annulus_file, str(f2))
    assert code == 0 and len(json.loads(out)["flips"]) == 1


def test_ar_subcommand(capsys, annulus_file):
    code, out, _ = run(capsys, "ar", "--object", "band:10,14,-3,-9;n=1;l=1",
                       annulus_file)
    doc = json.loads(out)
    assert code == 0
    assert "n=2" in doc["middle"][0]


def test_rigid_subcommand(capsys, annulus_file):
    code, out, _ = run(capsys, "rigid", "--object", "arc:2", annulus_file)
    assert code == 0 and json.loads(out) == {"rigid": True}


def test_enumerate_counts(capsys, hexagon_file):
    code, out, _ = run(capsys, "enumerate", "--max-len", "10", hexagon_file)
    doc = json.loads(out)
    assert len(doc["arcs"]) + len(doc["strings"]) == 9
    assert doc["bands"] == []


def test_ct_check(capsys, annulus_file):
    code, out, _ = run(capsys, "ct-check", "--object", "arc:1", "--object",
                       "arc:2", "--object", "arc:3", "--object", "arc:4",
                       "--object", "arc:5", annulus_file)
    doc = json.loads(out)
    assert code == 0 and doc["ok"] is True and "triangulation" in doc


def test_resolve_self_witness(capsys, annulus_file):
    code, out, _ = run(capsys, "resolve-self", "--object",
                       "w:9,3,-14", annulus_file)
    doc = json.loads(out)
    assert code == 0 and doc["certified"] is True


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["definitely-not-a-command"])
    assert exc.value.code == 2
