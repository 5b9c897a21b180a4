"""Projective plane: charts, R^4 embedding, partial inverses, glued inverse, appendix maps."""

from __future__ import annotations

import math

import numpy as np
import pytest

from qsurf import projective
from qsurf.primitives import NotOnSurfaceError, Point4
from qsurf.projective import ProjectivePoint
from qsurf.quotient import (
    ANTIPODAL,
    PROJECTIVE,
    ParamPoint,
    SpherePoint,
    canonicalize,
    class_distance,
    related_antipodal,
)
from qsurf.sampling import fibonacci_sphere, special_sphere_points

ROOT_HALF = 1.0 / math.sqrt(2.0)


def pp(a: float, b: float) -> ParamPoint:
    return ParamPoint(a, b, PROJECTIVE)


def random_sphere(count: int, seed: int) -> list[SpherePoint]:
    rng = np.random.default_rng(seed)
    return [SpherePoint.unit(*map(float, v)) for v in rng.normal(size=(count, 3))]


def test_square_to_hemisphere_examples():
    assert tuple(projective.square_to_hemisphere(pp(0.0, 0.0)).representative) == (0.0, 0.0, 1.0)
    rep = projective.square_to_hemisphere(pp(1.0, 1.0)).representative
    assert rep.x == pytest.approx(ROOT_HALF, abs=1e-15)
    assert rep.y == pytest.approx(ROOT_HALF, abs=1e-15)
    assert rep.z == 0.0


def test_square_to_hemisphere_compatible_with_gluing():
    for y in [-1.0, -0.4, 0.0, 0.3, 1.0]:
        left = projective.square_to_hemisphere(pp(-1.0, y))
        right = projective.square_to_hemisphere(pp(1.0, -y))
        assert class_distance(left.representative, right.representative, ANTIPODAL) <= 1e-9


def test_square_to_hemisphere_outputs_unit_vectors():
    grid = [(2 * i - 20) / 20 for i in range(21)]
    for a in grid:
        for b in grid:
            rep = projective.square_to_hemisphere(pp(a, b)).representative
            assert abs(rep.x**2 + rep.y**2 + rep.z**2 - 1.0) <= 1e-12


def test_hemisphere_to_square_examples():
    assert tuple(projective.hemisphere_to_square(SpherePoint(0, 0, 1)).representative) == (0.0, 0.0)
    assert tuple(projective.hemisphere_to_square(SpherePoint(0, 0, -1)).representative) == (0.0, 0.0)
    rep = projective.hemisphere_to_square(SpherePoint(ROOT_HALF, ROOT_HALF, 0.0)).representative
    assert class_distance(rep, pp(1.0, 1.0), PROJECTIVE) <= 1e-9


def test_chart_special_cases_absorb_subnormal_offsets():
    # Within 1e-300 of the chart's removable singularity the special-case
    # value is taken instead of dividing vanishing norms.
    near_pole = SpherePoint(1e-305, -1e-310, 1.0)
    assert tuple(projective.hemisphere_to_square(near_pole).representative) == (0.0, 0.0)
    near_center = pp(1e-305, -1e-310)
    assert tuple(projective.square_to_hemisphere(near_center).representative) == (0.0, 0.0, 1.0)


def test_hemisphere_to_square_antipodal_invariance():
    for s in random_sphere(50, 29):
        first = projective.hemisphere_to_square(s).representative
        second = projective.hemisphere_to_square(-s).representative
        assert class_distance(first, second, PROJECTIVE) <= 1e-9


def test_chart_round_trips_at_class_level():
    grid = [(2 * i - 20) / 20 for i in range(21)]
    for a in grid:
        for b in grid:
            sphere = projective.square_to_hemisphere(pp(a, b)).representative
            back = projective.hemisphere_to_square(sphere).representative
            assert class_distance(back, pp(a, b), PROJECTIVE) <= 1e-9
    for s in fibonacci_sphere(100):
        square = projective.hemisphere_to_square(s).representative
        again = projective.square_to_hemisphere(square).representative
        assert class_distance(again, s, ANTIPODAL) <= 1e-9


def test_embed_examples():
    assert tuple(projective.embed(SpherePoint(1, 0, 0))) == (0.0, 0.0, 0.0, 0.0)
    assert tuple(projective.embed(SpherePoint(0, 1, 0))) == (0.0, 0.0, 1.0, 0.0)
    image = projective.embed(SpherePoint(0.0, ROOT_HALF, ROOT_HALF))
    assert image.u == 0.0 and image.v == 0.0
    assert image.w == pytest.approx(0.0, abs=1e-15)
    assert image.t == pytest.approx(1.0, abs=1e-15)


def test_embed_antipodal_bit_exact():
    for s in random_sphere(100, 31) + special_sphere_points():
        assert tuple(projective.embed(s)) == tuple(projective.embed(-s))


def test_implicit_residuals_values():
    assert projective.implicit_residuals(Point4(0, 0, 0, 0)) == (0.0, 0.0)
    first, second = projective.implicit_residuals(Point4(1, 0, 0, 0))
    assert first == 0.0
    assert second == -2.0


def test_implicit_residuals_vanish_on_image():
    for s in random_sphere(100, 37):
        first, second = projective.implicit_residuals(projective.embed(s))
        assert abs(first) <= 1e-12
        assert abs(second) <= 1e-12


def test_recovered_squares_examples():
    assert projective.recovered_squares(Point4(0, 0, 1, 0), "w") == (0.0, 1.0, 0.0)
    image = projective.embed(SpherePoint(0.6, 0.8, 0.0))
    assert tuple(image) == (0.48, 0.0, pytest.approx(0.64), 0.0)
    squares = projective.recovered_squares(image, "u")
    assert squares[0] == pytest.approx(0.36, abs=1e-15)
    assert squares[1] == pytest.approx(0.64, abs=1e-15)
    assert squares[2] == 0.0


def test_recovered_squares_sum_to_one_across_branches():
    for s in random_sphere(200, 41):
        image = projective.embed(s)
        for branch in ("u", "v", "w", "t"):
            if getattr(image, branch) == 0.0:
                continue
            squares = projective.recovered_squares(image, branch)
            assert abs(sum(squares) - 1.0) <= 1e-12
            assert all(value >= 0.0 for value in squares)


def test_recovered_squares_branch_preconditions():
    with pytest.raises(ValueError):
        projective.recovered_squares(Point4(0, 0, 1, 0), "u")
    with pytest.raises(ValueError):
        projective.recovered_squares(Point4(0, 0, 1, 0), "sphere")
    with pytest.raises(NotOnSurfaceError):
        projective.recovered_squares(Point4(0, 0, 2, 0), "w")


@pytest.mark.parametrize(
    "point, branch, expected",
    [
        ((0.0, 0.0, 0.0, 0.0), "0", (1.0, 0.0, 0.0)),
        ((0.0, 0.0, 1.0, 0.0), "w", (0.0, 1.0, 0.0)),
        ((0.0, 0.0, 0.0, 1.0), "t", (0.0, ROOT_HALF, ROOT_HALF)),
    ],
)
def test_partial_inverse_examples(point, branch, expected):
    recovered = projective.partial_inverse(Point4(*point), branch)
    for got, want in zip(recovered, expected):
        assert got == pytest.approx(want, abs=1e-15)


def test_partial_inverse_branch_zero_requires_origin():
    with pytest.raises(ValueError):
        projective.partial_inverse(Point4(0, 0, 1, 0), "0")


def test_partial_inverses_agree_on_overlaps():
    for s in random_sphere(150, 43):
        image = projective.embed(s)
        applicable = [n for n in ("u", "v", "w", "t") if getattr(image, n) != 0.0]
        reps = [
            canonicalize(projective.partial_inverse(image, n), ANTIPODAL).representative
            for n in applicable
        ]
        for first, second in zip(reps, reps[1:]):
            assert class_distance(first, second, ANTIPODAL) <= 1e-9


def test_inverse_examples():
    assert tuple(projective.inverse(Point4(0, 0, 0, 0)).representative) == (1.0, 0.0, 0.0)
    assert tuple(projective.inverse(Point4(0, 0, 1, 0)).representative) == (0.0, 1.0, 0.0)
    image = projective.embed(SpherePoint(0.6, 0.8, 0.0))
    rep = projective.inverse(image).representative
    assert class_distance(rep, SpherePoint(0.6, 0.8, 0.0), ANTIPODAL) <= 1e-9


def test_inverse_round_trip():
    for s in random_sphere(200, 47) + special_sphere_points():
        image = projective.embed(s)
        rep = projective.inverse(image).representative
        again = projective.embed(rep)
        assert max(abs(a - b) for a, b in zip(again, image)) <= 1e-9
        assert related_antipodal(rep, s)


def test_inverse_rejects_off_surface():
    with pytest.raises(NotOnSurfaceError):
        projective.inverse(Point4(1.0, 0.0, 0.0, 0.0))  # second residual is -2
    with pytest.raises(NotOnSurfaceError):
        projective.inverse(Point4(0.0, 0.0, 2.0, 0.0))  # squares leave [0, 1]
    with pytest.raises(NotOnSurfaceError):
        projective.inverse(Point4(1e-10, 0.0, 1.0 + 1e-7, 0.0))  # fails re-embedding


def test_rp2_normalize_examples():
    assert tuple(projective.rp2_normalize(ProjectivePoint(2, 0, 0)).representative) == (1.0, 0.0, 0.0)
    assert tuple(projective.rp2_normalize(ProjectivePoint(0, 0, -5)).representative) == (0.0, 0.0, 1.0)
    with pytest.raises(ValueError):
        ProjectivePoint(0, 0, 0)


def test_rp2_normalize_scale_invariant():
    for s in random_sphere(100, 53):
        base = projective.rp2_normalize(ProjectivePoint(s.x, s.y, s.z)).representative
        for lam in (-3.0, 0.01, 1e6):
            scaled = projective.rp2_normalize(
                ProjectivePoint(lam * s.x, lam * s.y, lam * s.z)
            ).representative
            assert max(abs(a - b) for a, b in zip(scaled, base)) <= 1e-9


def test_sphere_to_rp2_round_trip():
    for s in random_sphere(100, 59):
        line = projective.sphere_to_rp2(s)
        rep = projective.rp2_normalize(line).representative
        assert class_distance(rep, s, ANTIPODAL) <= 1e-9


def test_fibonacci_sphere_first_point_and_units():
    assert tuple(fibonacci_sphere(1)[0]) == (1.0, 0.0, 0.0)
    points = fibonacci_sphere(500)
    assert len(points) == 500
    for s in points:
        assert abs(s.x**2 + s.y**2 + s.z**2 - 1.0) <= 1e-12
    with pytest.raises(ValueError):
        fibonacci_sphere(0)


def test_special_sphere_points_cover_sign_patterns():
    points = special_sphere_points()
    assert len(points) == 26
    coords = {tuple(s) for s in points}
    assert len(coords) == 26
    # closed under the antipodal flip
    for s in points:
        assert tuple(-s) in coords
