"""Verification harness: suites pass, reports are deterministic, serialization is stable."""

from __future__ import annotations

import pytest

from qsurf.tolerances import Tolerances
from qsurf.torus import TorusGeometry
from qsurf.verify import (
    CHECKS,
    SURFACES,
    GridSpec,
    continuity_families,
    run_suite,
    seam_csv,
    seam_ratios_certified,
    seam_study,
)

SMALL = GridSpec(9)


def test_grid_spec_validation_and_axis():
    with pytest.raises(ValueError):
        GridSpec(2)
    axis = GridSpec(5).axis_values()
    assert axis == [-1.0, -0.5, 0.0, 0.5, 1.0]
    sparse = GridSpec(4, include_special=True).axis_values()
    assert {-1.0, -0.5, 0.0, 0.5, 1.0} <= set(sparse)
    bare = GridSpec(4, include_special=False).axis_values()
    assert 0.5 not in bare
    assert all(-v in bare for v in bare)


@pytest.mark.parametrize("surface", SURFACES)
def test_suites_pass_and_cover_registry(surface):
    report = run_suite(surface, grid=SMALL, samples=150)
    assert tuple(check.name for check in report.checks) == CHECKS[surface]
    assert report.passed, report.to_text()
    assert all(check.cases > 0 for check in report.checks)


def test_unknown_surface_rejected():
    with pytest.raises(ValueError):
        run_suite("klein")


def test_reports_are_deterministic():
    first = run_suite("mobius", grid=SMALL, seed=5)
    second = run_suite("mobius", grid=SMALL, seed=5)
    assert first.to_text() == second.to_text()
    assert first.to_csv() == second.to_csv()
    third = run_suite("projective", samples=120, seed=9)
    fourth = run_suite("projective", samples=120, seed=9)
    assert third.to_csv() == fourth.to_csv()


def test_report_serialization_shape():
    report = run_suite("rp2", samples=50)
    csv_text = report.to_csv()
    lines = csv_text.strip().split("\n")
    assert lines[0] == "suite,check,cases,max_error,tolerance,pass"
    assert len(lines) == 1 + len(report.checks)
    for line in lines[1:]:
        fields = line.split(",")
        assert fields[0] == "rp2"
        assert fields[5] in ("true", "false")
        float(fields[3])
        float(fields[4])
    text = report.to_text()
    assert text.startswith("suite: rp2")
    assert "tolerances:" in text
    assert text.endswith("result: PASS")


def test_tolerance_overrides_are_echoed_and_applied():
    from qsurf.primitives import format_float

    tight = Tolerances(eq=1e-9, rt=1e-18, res=1e-12, member=1e-8)
    report = run_suite("mobius", grid=SMALL, tol=tight)
    assert f"rt={format_float(1e-18)}" in report.to_text()
    round_trip = next(c for c in report.checks if c.name == "round_trip")
    assert round_trip.tolerance == 1e-18
    assert not round_trip.passed  # round-off alone exceeds an absurdly tight bound
    assert not report.passed


def test_torus_suite_covers_alternate_geometries():
    for geom in (TorusGeometry(2.0, 0.5), TorusGeometry(1.1, 1.0)):
        report = run_suite("torus", grid=GridSpec(7), geom=geom)
        assert report.passed, report.to_text()


def test_seam_study_rows_and_band():
    rows = seam_study("mobius", (2, 3, 4), t=0.5)
    assert len(rows) == 3
    assert rows[0].ratio is None
    for row in rows[1:]:
        assert 0.005 <= row.ratio <= 0.02
    assert seam_ratios_certified(rows, (2, 3, 4))
    torus_rows = seam_study("torus", (2, 3, 4), geom=TorusGeometry(3.0, 1.0))
    assert seam_ratios_certified(torus_rows, (2, 3, 4))


def test_seam_study_skipping_decades_certifies_against_step():
    rows = seam_study("mobius", (2, 4))
    assert rows[1].ratio == pytest.approx(1e-4, rel=2e-3)
    assert seam_ratios_certified(rows, (2, 4))


def test_seam_study_validation():
    with pytest.raises(ValueError):
        seam_study("projective", (2, 3))
    with pytest.raises(ValueError):
        seam_study("mobius", (1, 2))
    with pytest.raises(ValueError):
        seam_study("mobius", (3, 2))
    with pytest.raises(ValueError):
        seam_study("mobius", ())


def test_seam_csv_layout():
    rows = seam_study("torus", (2, 3))
    text = seam_csv(rows)
    lines = text.strip().split("\n")
    assert lines[0] == "y,gap,ratio"
    assert lines[1].endswith(",")  # first ratio is empty
    assert len(lines) == 3


def test_continuity_families_shape():
    families = continuity_families()
    assert len(families) == 16
    assert len({name for name, _ in families}) == 16
    for _name, curve in families:
        point = curve(1e-3)
        assert abs(point.x**2 + point.y**2 + point.z**2 - 1.0) <= 1e-12
