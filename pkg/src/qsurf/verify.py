"""Property suites certifying the geometry modules, with machine-readable reports.

Each surface gets one suite built from named checks; a check records how
many cases it scanned, the worst error it saw, and the tolerance it was
held to.  Suites are deterministic functions of (surface, grid,
geometry, samples, seed), and the set of check names per suite is pinned
by the ``CHECKS`` table so nothing silently drops out.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import mobius, projective
from . import torus as torus_mod
from .primitives import format_float
from .quotient import (
    ANTIPODAL,
    MOBIUS,
    PROJECTIVE,
    TORUS,
    ParamPoint,
    SpherePoint,
    canonicalize,
    class_distance,
    class_members,
    related_antipodal,
    related_mobius,
    related_projective,
    related_torus,
)
from .sampling import fibonacci_sphere, special_sphere_points
from .tolerances import DEFAULT_TOLERANCES, Tolerances
from .torus import TorusGeometry

__all__ = [
    "SURFACES",
    "CHECKS",
    "GridSpec",
    "CheckResult",
    "VerifyReport",
    "SeamRow",
    "run_suite",
    "seam_study",
    "seam_csv",
    "seam_ratios_certified",
    "continuity_families",
]

SURFACES = ("mobius", "torus", "projective", "hemisphere", "rp2")

# Unrelated parameter pairs must map at least this fraction of their
# quotient distance apart, which turns injectivity into a numeric check.
SEPARATION_FACTOR = 1e-3

# Seam probes: transverse parameter decades and the band certifying
# quadratic decay of the gap (ratio per decade centered on 1e-2).
SEAM_DECADES = (2, 3, 4)
SEAM_RATIO_BAND = (0.005, 0.02)
_SEAM_PROBE_WIDTHS = (-1.0, -0.5, 0.5, 1.0)

# The glued projective inverse is probed for continuity along these
# parameter exponents; consecutive outputs may drift at most
# 10 * 10^-k in class distance.
CONTINUITY_EXPONENTS = (2, 3, 4, 5, 6)
CONTINUITY_DRIFT_FACTOR = 10.0

# Partial-inverse overlap: a recovered square below this floor sits at the
# cancellation scale of the branch formulas (they subtract O(1) terms, and
# sample points are unit only to machine precision), so its square root is
# accurate to sqrt(eps) ~ 1.5e-8 at best.  Pairs touching such squares are
# held to the derived bound instead of the class-equality tolerance.
DEGENERATE_SQUARE_FLOOR = 1e-9
OVERLAP_DEGENERATE_TOL = 5e-8

_RELATION_CHECK_NAMES = (
    "relation_reflexive_symmetric",
    "relation_matches_canonical",
    "canonicalize_idempotent",
    "class_distance_consistency",
)

CHECKS: dict[str, tuple[str, ...]] = {
    "mobius": _RELATION_CHECK_NAMES
    + (
        "compatibility_forward",
        "compatibility_reverse",
        "injectivity_separation",
        "round_trip",
        "class_round_trip",
        "inverse_range",
        "implicit_residual",
        "z_root_recovery",
        "seam_quadratic_decay",
    ),
    "torus": _RELATION_CHECK_NAMES
    + (
        "relation_corner_transitivity",
        "compatibility_forward",
        "compatibility_reverse",
        "injectivity_separation",
        "round_trip",
        "class_round_trip",
        "inverse_range",
        "implicit_residual",
        "interior_identity",
        "seam_quadratic_decay",
        "seam_gap_coefficient",
    ),
    "projective": _RELATION_CHECK_NAMES
    + (
        "antipodal_exactness",
        "compatibility_forward",
        "compatibility_reverse",
        "overlap_consistency",
        "overlap_degenerate_strata",
        "round_trip",
        "implicit_residuals",
        "squares_sum_to_one",
        "squares_cross_branch",
        "continuity_probe",
    ),
    "hemisphere": _RELATION_CHECK_NAMES
    + (
        "unit_norm",
        "composite_square_identity",
        "composite_sphere_identity",
    ),
    "rp2": (
        "scale_invariance",
        "round_trip_sphere",
    ),
}


@dataclass(frozen=True)
class GridSpec:
    """Axis sampling of the parameter square: n points per axis, endpoints included."""

    n: int = 41
    include_special: bool = True

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError("grid needs at least 3 points per axis")

    def axis_values(self) -> list[float]:
        """Symmetric axis values; (2i - m)/m so that negation is exact."""
        m = self.n - 1
        values = {(2 * i - m) / m for i in range(self.n)}
        if self.include_special:
            values |= {-1.0, -0.5, 0.0, 0.5, 1.0}
        return sorted(values)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check."""

    name: str
    cases: int
    max_error: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_error <= self.tolerance


@dataclass
class VerifyReport:
    """A suite's checks plus the parameters and tolerances that produced them."""

    suite: str
    checks: list[CheckResult]
    tolerances: Tolerances
    parameters: dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_text(self) -> str:
        lines = [f"suite: {self.suite}"]
        if self.parameters:
            rendered = " ".join(f"{key}={value}" for key, value in self.parameters.items())
            lines.append(f"parameters: {rendered}")
        tol = self.tolerances
        lines.append(
            "tolerances: "
            f"eq={format_float(tol.eq)} rt={format_float(tol.rt)} "
            f"res={format_float(tol.res)} member={format_float(tol.member)}"
        )
        for check in self.checks:
            lines.append(
                f"{check.name:<32} cases={check.cases:<8} "
                f"max_error={format_float(check.max_error):<24} "
                f"tolerance={format_float(check.tolerance):<24} "
                f"{'PASS' if check.passed else 'FAIL'}"
            )
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)

    def to_csv(self) -> str:
        lines = ["suite,check,cases,max_error,tolerance,pass"]
        for check in self.checks:
            lines.append(
                f"{self.suite},{check.name},{check.cases},"
                f"{format_float(check.max_error)},{format_float(check.tolerance)},"
                f"{'true' if check.passed else 'false'}"
            )
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class SeamRow:
    """One seam probe: transverse coordinate y, measured gap, ratio to the previous gap."""

    y: float
    gap: float
    ratio: float | None


def _max_abs_diff(a, b) -> float:
    return max(abs(x - y) for x, y in zip(a, b))


def _pair_scan(
    coords: np.ndarray,
    members: np.ndarray,
    canon: np.ndarray,
    images: np.ndarray | None,
    tol: Tolerances,
    chunk: int = 256,
) -> dict:
    """All-pairs reductions: relatedness vs canonical agreement, distances, separations.

    ``coords`` is (N, d); ``members`` is (N, m, d) listing each point's
    class, padded by repetition; ``canon`` is (N, d) canonical
    representatives; ``images`` is an optional (N, k) embedding.
    Relatedness of (i, j) means some member of j's class is
    coordinatewise within tol.eq of i, mirroring the scalar definition.
    """
    n = coords.shape[0]
    out = {
        "rel_canon_mismatch": 0,
        "class_dist_mismatch": 0,
        "img_related_max": 0.0,
        "img_close_unrelated": 0,
        "separation_violations": 0,
        "related_pairs": [],
        "pair_count": n * n,
    }
    for start in range(0, n, chunk):
        end = min(start + chunk, n)
        diff = coords[start:end, None, None, :] - members[None, :, :, :]
        related = (np.abs(diff) <= tol.eq).all(axis=3).any(axis=2)
        canon_close = (np.abs(canon[start:end, None, :] - canon[None, :, :]) <= tol.eq).all(axis=2)
        out["rel_canon_mismatch"] += int((related != canon_close).sum())
        dist_min = np.sqrt((diff * diff).sum(axis=3)).min(axis=2)
        out["class_dist_mismatch"] += int(((dist_min <= tol.eq) != related).sum())
        if images is not None:
            img_diff = images[start:end, None, :] - images[None, :, :]
            img_inf = np.abs(img_diff).max(axis=2)
            if related.any():
                out["img_related_max"] = max(out["img_related_max"], float(img_inf[related].max()))
            unrelated = ~related
            out["img_close_unrelated"] += int((img_inf[unrelated] <= tol.eq).sum())
            img_two = np.sqrt((img_diff * img_diff).sum(axis=2))
            out["separation_violations"] += int(
                (img_two[unrelated] <= SEPARATION_FACTOR * dist_min[unrelated]).sum()
            )
        for local_i, j in np.argwhere(related):
            i = start + int(local_i)
            if i < j:
                out["related_pairs"].append((i, int(j)))
    return out


def _relation_checks(
    points: list,
    relation: str,
    related_fn: Callable,
    scan: dict,
    rng: np.random.Generator,
    spot_pairs: int = 2000,
) -> list[CheckResult]:
    n = len(points)
    failures = 0
    cases = 0
    for p in points:
        cases += 1
        if not related_fn(p, p):
            failures += 1
    for i, j in scan["related_pairs"]:
        cases += 2
        if not related_fn(points[i], points[j]):
            failures += 1
        if not related_fn(points[j], points[i]):
            failures += 1
    for i, j in rng.integers(0, n, size=(spot_pairs, 2)):
        cases += 1
        if related_fn(points[int(i)], points[int(j)]) != related_fn(points[int(j)], points[int(i)]):
            failures += 1
    idempotent_failures = 0
    for p in points:
        once = canonicalize(p, relation)
        twice = canonicalize(once.representative, relation)
        if twice != once:
            idempotent_failures += 1
    return [
        CheckResult("relation_reflexive_symmetric", cases, float(failures), 0.0),
        CheckResult("relation_matches_canonical", scan["pair_count"], float(scan["rel_canon_mismatch"]), 0.0),
        CheckResult("canonicalize_idempotent", n, float(idempotent_failures), 0.0),
        CheckResult("class_distance_consistency", scan["pair_count"], float(scan["class_dist_mismatch"]), 0.0),
    ]


def _band_seam_rows(surface: str, decades, geom: TorusGeometry, t: float) -> list[SeamRow]:
    rows: list[SeamRow] = []
    previous = None
    for exponent in decades:
        parameter = 10.0 ** (-exponent)
        if surface == "mobius":
            point = mobius.embed(ParamPoint(t, parameter, MOBIUS))
            gap = mobius.seam_gap(point.x, point.y, point.z)
        else:
            point = torus_mod.embed(ParamPoint(parameter, t, TORUS), geom)
            gap = torus_mod.seam_gap(point, geom)
        ratio = None if previous is None else gap / previous
        rows.append(SeamRow(point.y, gap, ratio))
        previous = gap
    return rows


def _band_violation(ratio: float, lo: float, hi: float) -> float:
    return max(0.0, lo - ratio, ratio - hi)


def _run_band_suite(
    surface: str,
    grid: GridSpec,
    geom: TorusGeometry,
    tol: Tolerances,
    rng: np.random.Generator,
) -> list[CheckResult]:
    if surface == "mobius":
        tag = MOBIUS
        related_fn = related_mobius
        embed_fn = mobius.embed
        invert_fn = mobius.inverse
        residual_fn = mobius.implicit_residual
        residual_tol = tol.res
    else:
        tag = TORUS
        related_fn = related_torus
        embed_fn = lambda p: torus_mod.embed(p, geom)
        invert_fn = lambda q: torus_mod.inverse(q, geom)
        residual_fn = lambda q: torus_mod.implicit_residual(q, geom)
        residual_tol = tol.res * max(1.0, geom.R * geom.R)

    axis = grid.axis_values()
    points = [ParamPoint(a, b, tag) for b in axis for a in axis]
    embedded = [embed_fn(p) for p in points]
    coords = np.array([tuple(p) for p in points])
    images = np.array([tuple(q) for q in embedded])
    canon_pts = [canonicalize(p, tag).representative for p in points]
    canon = np.array([tuple(c) for c in canon_pts])
    member_lists = [class_members(p, tag) for p in points]
    width = max(len(ms) for ms in member_lists)
    members = np.array(
        [[tuple(ms[k] if k < len(ms) else ms[0]) for k in range(width)] for ms in member_lists]
    )

    scan = _pair_scan(coords, members, canon, images, tol)
    checks = _relation_checks(points, tag, related_fn, scan, rng)

    if surface == "torus":
        corners = [ParamPoint(a, b, TORUS) for a in (-1.0, 1.0) for b in (-1.0, 1.0)]
        corner_failures = sum(
            1 for c1 in corners for c2 in corners if not related_torus(c1, c2)
        )
        corner_failures += sum(
            1
            for c1 in corners
            for c2 in corners
            for c3 in corners
            if related_torus(c1, c2) and related_torus(c2, c3) and not related_torus(c1, c3)
        )
        checks.append(CheckResult("relation_corner_transitivity", 16 + 64, float(corner_failures), 0.0))

    checks.append(CheckResult("compatibility_forward", scan["pair_count"], scan["img_related_max"], tol.eq))
    checks.append(CheckResult("compatibility_reverse", scan["pair_count"], float(scan["img_close_unrelated"]), 0.0))
    checks.append(
        CheckResult("injectivity_separation", scan["pair_count"], float(scan["separation_violations"]), 0.0)
    )

    round_trip_max = 0.0
    class_round_trip_max = 0.0
    range_overshoot = 0.0
    interior_max = 0.0
    for p, q, canon_rep in zip(points, embedded, canon_pts):
        recovered = invert_fn(q)
        round_trip_max = max(round_trip_max, _max_abs_diff(embed_fn(recovered), q))
        recovered_canon = canonicalize(recovered, tag).representative
        class_round_trip_max = max(class_round_trip_max, _max_abs_diff(recovered_canon, canon_rep))
        range_overshoot = max(range_overshoot, abs(recovered.a) - 1.0, abs(recovered.b) - 1.0)
        if surface == "torus":
            interior = abs(p.a) < 1.0 and abs(p.b) < 1.0 and p.a not in (0.0, 0.5, -0.5)
            if interior:
                interior_max = max(interior_max, _max_abs_diff(recovered, p))
    checks.append(CheckResult("round_trip", len(points), round_trip_max, tol.rt))
    checks.append(CheckResult("class_round_trip", len(points), class_round_trip_max, tol.eq))
    checks.append(CheckResult("inverse_range", len(points), max(0.0, range_overshoot), 0.0))

    residual_max = max(abs(residual_fn(q)) for q in embedded)
    checks.append(CheckResult("implicit_residual", len(embedded), residual_max, residual_tol))

    if surface == "torus":
        interior_cases = sum(
            1 for p in points if abs(p.a) < 1.0 and abs(p.b) < 1.0 and p.a not in (0.0, 0.5, -0.5)
        )
        checks.append(CheckResult("interior_identity", interior_cases, interior_max, tol.eq))
    else:
        root_cases = 0
        root_max = 0.0
        for q in embedded:
            if abs(q.y) > 1e-6:
                root_cases += 1
                roots = mobius.z_roots(q.x, q.y)
                root_max = max(root_max, min(abs(roots[0] - q.z), abs(roots[1] - q.z)))
        checks.append(CheckResult("z_root_recovery", root_cases, root_max, tol.rt))

    lo, hi = SEAM_RATIO_BAND
    seam_violation = 0.0
    seam_cases = 0
    for transverse in _SEAM_PROBE_WIDTHS:
        rows = _band_seam_rows(surface, SEAM_DECADES, geom, transverse)
        for row in rows[1:]:
            seam_cases += 1
            seam_violation = max(seam_violation, _band_violation(row.ratio, lo, hi))
    checks.append(CheckResult("seam_quadratic_decay", seam_cases, seam_violation, 0.0))

    if surface == "torus":
        point = torus_mod.embed(ParamPoint(1e-3, 0.0, TORUS), geom)
        gap = torus_mod.seam_gap(point, geom)
        predicted = point.y * point.y / (2.0 * abs(point.x))
        checks.append(CheckResult("seam_gap_coefficient", 1, abs(gap / predicted - 1.0), 0.1))

    return checks


def _sphere_sample(samples: int) -> list[SpherePoint]:
    return fibonacci_sphere(samples) + special_sphere_points()


def _run_projective_suite(samples: int, tol: Tolerances, rng: np.random.Generator) -> list[CheckResult]:
    sphere = _sphere_sample(samples)
    embedded = [projective.embed(s) for s in sphere]
    coords = np.array([tuple(s) for s in sphere])
    images = np.array([tuple(q) for q in embedded])
    canon = np.array([tuple(canonicalize(s, ANTIPODAL).representative) for s in sphere])
    members = np.array([[tuple(m) for m in class_members(s, ANTIPODAL)] for s in sphere])

    scan = _pair_scan(coords, members, canon, images, tol)
    checks = _relation_checks(sphere, ANTIPODAL, related_antipodal, scan, rng)

    antipodal_max = max(_max_abs_diff(projective.embed(-s), q) for s, q in zip(sphere, embedded))
    checks.append(CheckResult("antipodal_exactness", len(sphere), antipodal_max, 0.0))

    checks.append(CheckResult("compatibility_forward", scan["pair_count"], scan["img_related_max"], tol.eq))
    checks.append(CheckResult("compatibility_reverse", scan["pair_count"], float(scan["img_close_unrelated"]), 0.0))

    overlap_max = 0.0
    overlap_cases = 0
    degenerate_max = 0.0
    degenerate_cases = 0
    cross_cases = 0
    sum_max = 0.0
    cross_max = 0.0
    round_trip_max = 0.0
    residual_max = 0.0
    for q in embedded:
        residual_max = max(residual_max, *map(abs, projective.implicit_residuals(q)))
        applicable = [name for name in ("u", "v", "w", "t") if getattr(q, name) != 0.0]
        branch_squares = {name: projective.recovered_squares(q, name) for name in applicable}
        branch_reps = {
            name: canonicalize(projective.partial_inverse(q, name), ANTIPODAL).representative
            for name in applicable
        }
        for squares in branch_squares.values():
            sum_max = max(sum_max, abs(sum(squares) - 1.0))
        for i, name_i in enumerate(applicable):
            for name_j in applicable[i + 1 :]:
                cross_cases += 1
                distance = class_distance(branch_reps[name_i], branch_reps[name_j], ANTIPODAL)
                degenerate = (
                    min(branch_squares[name_i] + branch_squares[name_j]) < DEGENERATE_SQUARE_FLOOR
                )
                if degenerate:
                    degenerate_cases += 1
                    degenerate_max = max(degenerate_max, distance)
                else:
                    overlap_cases += 1
                    overlap_max = max(overlap_max, distance)
                cross_max = max(
                    cross_max,
                    _max_abs_diff(branch_squares[name_i], branch_squares[name_j]),
                )
        recovered = projective.inverse(q).representative
        round_trip_max = max(round_trip_max, _max_abs_diff(projective.embed(recovered), q))
    checks.append(CheckResult("overlap_consistency", overlap_cases, overlap_max, tol.eq))
    checks.append(
        CheckResult("overlap_degenerate_strata", degenerate_cases, degenerate_max, OVERLAP_DEGENERATE_TOL)
    )
    checks.append(CheckResult("round_trip", len(embedded), round_trip_max, tol.rt))
    checks.append(CheckResult("implicit_residuals", len(embedded), residual_max, tol.res))
    checks.append(CheckResult("squares_sum_to_one", len(embedded), sum_max, tol.res))
    checks.append(CheckResult("squares_cross_branch", cross_cases, cross_max, tol.eq))

    drift_max = 0.0
    drift_cases = 0
    for _name, curve in continuity_families():
        reps = []
        for exponent in CONTINUITY_EXPONENTS:
            image = projective.embed(curve(10.0 ** (-exponent)))
            reps.append(projective.inverse(image).representative)
        for k, (first, second) in zip(CONTINUITY_EXPONENTS, zip(reps, reps[1:])):
            drift_cases += 1
            bound = CONTINUITY_DRIFT_FACTOR * 10.0 ** (-k)
            drift_max = max(drift_max, class_distance(first, second, ANTIPODAL) / bound)
    checks.append(CheckResult("continuity_probe", drift_cases, drift_max, 1.0))

    return checks


def _run_hemisphere_suite(
    grid: GridSpec, samples: int, tol: Tolerances, rng: np.random.Generator
) -> list[CheckResult]:
    axis = grid.axis_values()
    points = [ParamPoint(a, b, PROJECTIVE) for b in axis for a in axis]
    coords = np.array([tuple(p) for p in points])
    canon = np.array([tuple(canonicalize(p, PROJECTIVE).representative) for p in points])
    member_lists = [class_members(p, PROJECTIVE) for p in points]
    members = np.array(
        [[tuple(ms[k] if k < len(ms) else ms[0]) for k in range(2)] for ms in member_lists]
    )
    scan = _pair_scan(coords, members, canon, None, tol)
    checks = _relation_checks(points, PROJECTIVE, related_projective, scan, rng)

    norm_max = 0.0
    square_identity_max = 0.0
    for p in points:
        on_sphere = projective.square_to_hemisphere(p).representative
        norm_max = max(
            norm_max,
            abs(on_sphere.x**2 + on_sphere.y**2 + on_sphere.z**2 - 1.0),
        )
        back = projective.hemisphere_to_square(on_sphere).representative
        square_identity_max = max(square_identity_max, class_distance(back, p, PROJECTIVE))
    checks.append(CheckResult("unit_norm", len(points), norm_max, tol.res))
    checks.append(CheckResult("composite_square_identity", len(points), square_identity_max, tol.eq))

    # The sphere-side composite runs on the Fibonacci lattice alone: on the
    # degenerate equator points the chart recovers z as sqrt(1 - |.|^2) of
    # inputs that are unit only to machine precision, which caps accuracy
    # at sqrt(eps) ~ 1e-8 no matter how the charts are evaluated.
    sphere = fibonacci_sphere(samples)
    sphere_identity_max = 0.0
    for s in sphere:
        square = projective.hemisphere_to_square(s).representative
        again = projective.square_to_hemisphere(square).representative
        sphere_identity_max = max(sphere_identity_max, class_distance(again, s, ANTIPODAL))
    checks.append(CheckResult("composite_sphere_identity", len(sphere), sphere_identity_max, tol.eq))

    return checks


def _run_rp2_suite(samples: int, tol: Tolerances) -> list[CheckResult]:
    sphere = _sphere_sample(samples)
    scale_max = 0.0
    round_trip_max = 0.0
    for s in sphere:
        base = projective.rp2_normalize(projective.ProjectivePoint(s.x, s.y, s.z)).representative
        for lam in (-3.0, 0.01, 1e6):
            scaled = projective.rp2_normalize(
                projective.ProjectivePoint(lam * s.x, lam * s.y, lam * s.z)
            ).representative
            scale_max = max(scale_max, _max_abs_diff(scaled, base))
        direct = projective.rp2_normalize(projective.sphere_to_rp2(s)).representative
        round_trip_max = max(round_trip_max, class_distance(direct, s, ANTIPODAL))
    return [
        CheckResult("scale_invariance", len(sphere) * 3, scale_max, tol.eq),
        CheckResult("round_trip_sphere", len(sphere), round_trip_max, tol.eq),
    ]


def run_suite(
    surface: str,
    grid: GridSpec | None = None,
    geom: TorusGeometry | None = None,
    samples: int = 500,
    seed: int = 0,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> VerifyReport:
    """Run every named check of one surface's suite and report per-check maxima.

    Deterministic: identical inputs (including the seed driving the
    scalar spot-check sampling) produce identical reports.  Failures are
    report rows, never exceptions.
    """
    if surface not in SURFACES:
        raise ValueError(f"unknown surface {surface!r}; expected one of {SURFACES}")
    if samples < 1:
        raise ValueError("samples must be at least 1")
    grid = grid or GridSpec()
    geom = geom or TorusGeometry(3.0, 1.0)
    rng = np.random.default_rng(seed)

    parameters: dict[str, object] = {"seed": seed}
    if surface in ("mobius", "torus", "hemisphere"):
        parameters["grid_n"] = grid.n
        parameters["include_special"] = grid.include_special
    if surface == "torus":
        parameters["R"] = geom.R
        parameters["r"] = geom.r
    if surface in ("projective", "hemisphere", "rp2"):
        parameters["samples"] = samples

    if surface in ("mobius", "torus"):
        checks = _run_band_suite(surface, grid, geom, tol, rng)
    elif surface == "projective":
        checks = _run_projective_suite(samples, tol, rng)
    elif surface == "hemisphere":
        checks = _run_hemisphere_suite(grid, samples, tol, rng)
    else:
        checks = _run_rp2_suite(samples, tol)

    names = tuple(check.name for check in checks)
    if names != CHECKS[surface]:
        raise AssertionError(f"suite {surface} produced {names}, expected {CHECKS[surface]}")
    return VerifyReport(surface, checks, tol, parameters)


def seam_study(
    surface: str,
    decades=SEAM_DECADES,
    geom: TorusGeometry | None = None,
    t: float | None = None,
) -> list[SeamRow]:
    """Seam-gap decay table for one transverse line of probes.

    ``decades`` lists exponents k >= 2, strictly increasing, probing the
    transverse parameter at 10^-k (so the probes themselves descend).
    For the Mobius band the probe line is m(t, 10^-k) with width t
    defaulting to 0.5; for the torus it is the tube circle v = t
    (default 0) approached along u = 10^-k.
    """
    if surface not in ("mobius", "torus"):
        raise ValueError("seam_study applies to the mobius and torus surfaces only")
    decades = list(decades)
    if not decades:
        raise ValueError("decades must be nonempty")
    if any(k < 2 for k in decades):
        raise ValueError("seam probes start at parameter 1e-2, so decades must be >= 2")
    if any(b <= a for a, b in zip(decades, decades[1:])):
        raise ValueError("decades must be strictly increasing")
    geom = geom or TorusGeometry(3.0, 1.0)
    if t is None:
        t = 0.5 if surface == "mobius" else 0.0
    return _band_seam_rows(surface, decades, geom, t)


def seam_ratios_certified(rows: list[SeamRow], decades) -> bool:
    """True when every successive gap ratio certifies quadratic decay.

    For a step of d decades the expected ratio is 10^-2d; the certified
    band allows a factor of 2 either way, matching SEAM_RATIO_BAND for
    single-decade steps.
    """
    decades = list(decades)
    for row, step in zip(rows[1:], (b - a for a, b in zip(decades, decades[1:]))):
        expected = 10.0 ** (-2 * step)
        if not (0.5 * expected <= row.ratio <= 2.0 * expected):
            return False
    return True


def seam_csv(rows: list[SeamRow]) -> str:
    """CSV text of a seam study: columns y, gap, ratio (first ratio empty)."""
    lines = ["y,gap,ratio"]
    for row in rows:
        ratio = "" if row.ratio is None else format_float(row.ratio)
        lines.append(f"{format_float(row.y)},{format_float(row.gap)},{ratio}")
    return "\n".join(lines) + "\n"


def continuity_families() -> list[tuple[str, Callable[[float], SpherePoint]]]:
    """Sixteen sphere curves whose images approach the coordinate-vanishing loci.

    Four curves approach the isolated image of (1, 0, 0), where all four
    embedding coordinates vanish together; for each single coordinate,
    three curves approach its zero locus from base points where one of
    the other coordinates stays bounded away from zero, so the glued
    inverse is exercised across every branch handoff.
    """
    unit = SpherePoint.unit
    return [
        ("origin_via_u", lambda e: unit(1.0, e, 0.0)),
        ("origin_via_v", lambda e: unit(1.0, 0.0, e)),
        ("origin_via_t_pos", lambda e: unit(1.0, e, e)),
        ("origin_via_t_neg", lambda e: unit(1.0, e, -e)),
        ("t_zero_u_witness", lambda e: unit(1.0, 1.0, e)),
        ("t_zero_v_witness", lambda e: unit(1.0, e, 1.0)),
        ("t_zero_w_witness", lambda e: unit(e, 1.0, e * e)),
        ("w_zero_u_witness", lambda e: unit(1.0, 1.0 + e, 1.0)),
        ("w_zero_v_witness", lambda e: unit(1.0, 1.0 + e, -1.0)),
        ("w_zero_t_witness", lambda e: unit(e, 1.0 + e, 1.0)),
        ("v_zero_u_witness", lambda e: unit(1.0, -1.0, e)),
        ("v_zero_w_witness", lambda e: unit(e, 1.0, -e)),
        ("v_zero_t_witness", lambda e: unit(e, 1.0, 1.0)),
        ("u_zero_v_witness", lambda e: unit(1.0, e, -1.0)),
        ("u_zero_w_witness", lambda e: unit(e, e, 1.0)),
        ("u_zero_t_witness", lambda e: unit(e, -1.0, 1.0)),
    ]
