"""CLI behavior: output text, exit codes, file writing."""

from __future__ import annotations

import pytest

from qsurf.cli import main
from qsurf.mesh_export import read_obj


def run(argv):
    return main(argv)


def test_verify_mobius_passes(capsys):
    assert run(["verify", "--surface", "mobius", "--grid", "9"]) == 0
    out = capsys.readouterr().out
    assert "suite: mobius" in out
    assert "result: PASS" in out


def test_verify_mobius_full_grid(capsys):
    assert run(["verify", "--surface", "mobius", "--grid", "41"]) == 0
    assert "result: PASS" in capsys.readouterr().out


def test_verify_projective_with_samples(capsys):
    assert run(["verify", "--surface", "projective", "--samples", "120"]) == 0
    assert "result: PASS" in capsys.readouterr().out


def test_verify_invalid_geometry_is_usage_error(capsys):
    assert run(["verify", "--surface", "torus", "--grid", "9", "--R", "1", "--r", "2"]) == 2
    assert "R > r > 0" in capsys.readouterr().err


def test_verify_unknown_surface_exits_2():
    with pytest.raises(SystemExit) as excinfo:
        run(["verify", "--surface", "klein"])
    assert excinfo.value.code == 2


def test_verify_tolerance_override_can_fail(capsys):
    assert run(["verify", "--surface", "mobius", "--grid", "9", "--tol-rt", "1e-18"]) == 1
    assert "result: FAIL" in capsys.readouterr().out


def test_invert_mobius_example(capsys):
    assert run(["invert", "--surface", "mobius", "--point", " -1,0,0.5"]) == 0
    assert capsys.readouterr().out.strip() == "(1, 1)"


def test_invert_torus_example(capsys):
    assert run(["invert", "--surface", "torus", "--R", "3", "--r", "1", "--point", "4,0,0"]) == 0
    assert capsys.readouterr().out.strip() == "(0, 0)"


def test_invert_projective_example(capsys):
    assert run(["invert", "--surface", "projective", "--point", "0,0,0,0"]) == 0
    assert capsys.readouterr().out.strip() == "class (1, 0, 0)"


def test_invert_off_surface_exits_1(capsys):
    assert run(["invert", "--surface", "mobius", "--point", "0,0,1"]) == 1
    assert "not on surface" in capsys.readouterr().err


def test_invert_parse_and_arity_errors_exit_2(capsys):
    assert run(["invert", "--surface", "mobius", "--point", "one,two,three"]) == 2
    assert run(["invert", "--surface", "mobius", "--point", "1,2"]) == 2
    assert run(["invert", "--surface", "projective", "--point", "1,2,3"]) == 2


def test_seam_mobius(capsys):
    assert run(["seam", "--surface", "mobius", "--decades", "2,3,4"]) == 0
    out = capsys.readouterr().out
    lines = out.strip().split("\n")
    assert lines[0] == "y,gap,ratio"
    assert len(lines) == 4


def test_seam_torus(capsys):
    assert run(["seam", "--surface", "torus", "--decades", "2,3", "--R", "3", "--r", "1"]) == 0


def test_seam_rejects_projective():
    with pytest.raises(SystemExit) as excinfo:
        run(["seam", "--surface", "projective"])
    assert excinfo.value.code == 2


def test_seam_bad_decades_exit_2(capsys):
    assert run(["seam", "--surface", "mobius", "--decades", "1,2"]) == 2
    assert run(["seam", "--surface", "mobius", "--decades", "x,y"]) == 2


def test_export_torus_obj(tmp_path, capsys):
    out_path = tmp_path / "torus.obj"
    assert run(["export", "--surface", "torus", "--grid", "8", "--out", str(out_path)]) == 0
    vertices, faces = read_obj(out_path)
    assert len(vertices) == 64
    assert len(faces) == 128


def test_export_projective_csv(tmp_path):
    out_path = tmp_path / "p.csv"
    assert run(["export", "--surface", "projective", "--samples", "10", "--out", str(out_path)]) == 0
    text = out_path.read_text(encoding="utf-8")
    assert text.startswith("u,v,w,t\n")
    assert len(text.strip().split("\n")) == 11


def test_export_format_mismatch_exits_2(tmp_path, capsys):
    out_path = tmp_path / "x.obj"
    assert run(["export", "--surface", "projective", "--format", "obj", "--out", str(out_path)]) == 2


def test_export_write_failure_exits_1(tmp_path, capsys):
    missing_dir = tmp_path / "nope" / "x.obj"
    assert run(["export", "--surface", "torus", "--grid", "4", "--out", str(missing_dir)]) == 1
    assert "could not write" in capsys.readouterr().err


def test_export_requires_out_flag():
    with pytest.raises(SystemExit) as excinfo:
        run(["export", "--surface", "torus"])
    assert excinfo.value.code == 2
