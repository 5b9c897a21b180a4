"""Equivalence relations behind the glued-square surfaces and their canonical representatives.

Four relations live here: the three edge-gluing relations on the square
[-1, 1]^2 (one per surface) and the antipodal relation on the unit
sphere.  Collinearity on R^3 minus the origin reduces to the antipodal
relation after normalization and is handled by the projective module.

Every equivalence class has at most four members, so classes are
enumerated explicitly; no union-find machinery is needed.  Two points
are related exactly when their canonical representatives agree, which is
what the verify suites check on dense grids.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .primitives import coerce_floats
from .tolerances import TOL_EQ

MOBIUS = "mobius"
TORUS = "torus"
PROJECTIVE = "projective"
ANTIPODAL = "antipodal"

SQUARE_RELATIONS = (MOBIUS, TORUS, PROJECTIVE)
RELATIONS = SQUARE_RELATIONS + (ANTIPODAL,)

# Constructed unit vectors may carry a few ulps of normalization noise;
# anything beyond this is a genuine misuse of SpherePoint.
_NORM_GUARD = 1e-9


def _clean_zero(value: float) -> float:
    """Replace -0.0 by +0.0 so canonical representatives print plainly."""
    return value + 0.0


@dataclass(frozen=True)
class ParamPoint:
    """A point (a, b) of the square [-1, 1]^2, tagged with the polygon it parametrizes."""

    a: float
    b: float
    polygon: str

    def __post_init__(self) -> None:
        if self.polygon not in SQUARE_RELATIONS:
            raise ValueError(f"unknown polygon tag {self.polygon!r}")
        coerce_floats(self, "a", "b")
        if not (-1.0 <= self.a <= 1.0 and -1.0 <= self.b <= 1.0):
            raise ValueError(f"({self.a}, {self.b}) lies outside [-1, 1]^2")

    def __neg__(self) -> "ParamPoint":
        return ParamPoint(_clean_zero(-self.a), _clean_zero(-self.b), self.polygon)

    def __iter__(self):
        yield from (self.a, self.b)


@dataclass(frozen=True)
class SpherePoint:
    """A unit vector of R^3."""

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        coerce_floats(self, "x", "y", "z")
        norm_sq = self.x * self.x + self.y * self.y + self.z * self.z
        if not abs(norm_sq - 1.0) <= _NORM_GUARD:
            raise ValueError(f"({self.x}, {self.y}, {self.z}) is not a unit vector")

    @classmethod
    def unit(cls, x: float, y: float, z: float) -> "SpherePoint":
        """Normalize an arbitrary nonzero vector onto the sphere."""
        norm = math.hypot(x, y, z)
        if norm == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return cls(x / norm, y / norm, z / norm)

    def __neg__(self) -> "SpherePoint":
        return SpherePoint(-self.x, -self.y, -self.z)

    def __iter__(self):
        yield from (self.x, self.y, self.z)


@dataclass(frozen=True)
class QuotientClass:
    """An equivalence class, held by its canonical representative."""

    representative: ParamPoint | SpherePoint
    relation: str


def snap_to_unit_interval(value: float, tol: float = TOL_EQ) -> float | None:
    """Clamp a value to [-1, 1] when it overshoots by at most ``tol``.

    Returns None when the value is irrecoverably out of range; callers
    turn that into their own domain error.
    """
    if -1.0 <= value <= 1.0:
        return value
    if 1.0 < value <= 1.0 + tol:
        return 1.0
    if -1.0 - tol <= value < -1.0:
        return -1.0
    return None


def _close(u: float, v: float, tol: float = TOL_EQ) -> bool:
    return abs(u - v) <= tol


def _on_edge(value: float, tol: float = TOL_EQ) -> bool:
    """True when |value| is within tol of 1, i.e. the coordinate sits on a glued edge."""
    return abs(abs(value) - 1.0) <= tol


def _same_param(p: ParamPoint, q: ParamPoint, tol: float = TOL_EQ) -> bool:
    return _close(p.a, q.a, tol) and _close(p.b, q.b, tol)


def _same_sphere(p: SpherePoint, q: SpherePoint, tol: float = TOL_EQ) -> bool:
    return _close(p.x, q.x, tol) and _close(p.y, q.y, tol) and _close(p.z, q.z, tol)


def _require_tag(point: ParamPoint, polygon: str) -> None:
    if point.polygon != polygon:
        raise ValueError(f"expected a {polygon!r} square point, got {point.polygon!r}")


def class_members(point: ParamPoint | SpherePoint, relation: str):
    """All members of the equivalence class of ``point`` (at most four).

    The listing realizes the gluing rules directly: the Mobius square
    identifies (a, b) with (-a, -b) on the b = +-1 edges; the torus
    square flips each +-1 coordinate independently (so corners have four
    members, transitively closing the two edge rules); the projective
    square identifies every boundary point with its negative; the sphere
    pairs antipodes.
    """
    if relation == ANTIPODAL:
        if not isinstance(point, SpherePoint):
            raise ValueError("the antipodal relation lives on the sphere")
        return (point, -point)
    if not isinstance(point, ParamPoint):
        raise ValueError(f"relation {relation!r} lives on the square")
    _require_tag(point, relation)
    if relation == MOBIUS:
        return (point, -point) if _on_edge(point.b) else (point,)
    if relation == TORUS:
        a_values = (point.a, _clean_zero(-point.a)) if _on_edge(point.a) else (point.a,)
        b_values = (point.b, _clean_zero(-point.b)) if _on_edge(point.b) else (point.b,)
        return tuple(ParamPoint(a, b, TORUS) for a in a_values for b in b_values)
    if relation == PROJECTIVE:
        on_boundary = _on_edge(point.a) or _on_edge(point.b)
        return (point, -point) if on_boundary else (point,)
    raise ValueError(f"unknown relation {relation!r}")


def related_mobius(p: ParamPoint, q: ParamPoint) -> bool:
    """True when p and q are glued in the Mobius square: equal, or negatives across the b = +-1 edges."""
    _require_tag(p, MOBIUS)
    _require_tag(q, MOBIUS)
    return any(_same_param(q, member) for member in class_members(p, MOBIUS))


def related_torus(p: ParamPoint, q: ParamPoint) -> bool:
    """True when p and q are glued in the torus square (opposite edges identified, corners closed)."""
    _require_tag(p, TORUS)
    _require_tag(q, TORUS)
    return any(_same_param(q, member) for member in class_members(p, TORUS))


def related_projective(p: ParamPoint, q: ParamPoint) -> bool:
    """True when p and q are glued in the projective square: equal, or boundary antipodes."""
    _require_tag(p, PROJECTIVE)
    _require_tag(q, PROJECTIVE)
    return any(_same_param(q, member) for member in class_members(p, PROJECTIVE))


def related_antipodal(p: SpherePoint, q: SpherePoint) -> bool:
    """True when q equals p or its antipode, coordinatewise within tolerance."""
    return _same_sphere(q, p) or _same_sphere(q, -p)


def canonicalize(point: ParamPoint | SpherePoint, relation: str) -> QuotientClass:
    """Canonical representative of the class of ``point``.

    Rules: Mobius sends the b = -1 edge to the b = +1 edge with the sign
    flip; the torus snaps each glued coordinate to +1; the projective
    square keeps whichever of {p, -p} is lexicographically greater by
    (b, a) on the boundary; the sphere keeps whichever of {s, -s} is
    greater by (z, y, x).  Idempotent by construction.
    """
    if relation == ANTIPODAL:
        if not isinstance(point, SpherePoint):
            raise ValueError("the antipodal relation lives on the sphere")
        negated = -point
        if (point.z, point.y, point.x) >= (negated.z, negated.y, negated.x):
            chosen = point
        else:
            chosen = negated
        rep = SpherePoint(_clean_zero(chosen.x), _clean_zero(chosen.y), _clean_zero(chosen.z))
        return QuotientClass(rep, ANTIPODAL)
    if not isinstance(point, ParamPoint):
        raise ValueError(f"relation {relation!r} lives on the square")
    _require_tag(point, relation)
    if relation == MOBIUS:
        if _close(point.b, -1.0):
            return QuotientClass(ParamPoint(_clean_zero(-point.a), 1.0, MOBIUS), MOBIUS)
        return QuotientClass(point, MOBIUS)
    if relation == TORUS:
        a = 1.0 if _on_edge(point.a) else point.a
        b = 1.0 if _on_edge(point.b) else point.b
        return QuotientClass(ParamPoint(a, b, TORUS), TORUS)
    if relation == PROJECTIVE:
        if _on_edge(point.a) or _on_edge(point.b):
            negated = -point
            chosen = point if (point.b, point.a) >= (negated.b, negated.a) else negated
            return QuotientClass(chosen, PROJECTIVE)
        return QuotientClass(point, PROJECTIVE)
    raise ValueError(f"unknown relation {relation!r}")


def class_distance(p: ParamPoint | SpherePoint, q: ParamPoint | SpherePoint, relation: str) -> float:
    """Distance from p to the equivalence class of q: min over members of the Euclidean distance.

    Zero (up to round-off) exactly when p and q are related, which makes
    it a usable metric proxy on the quotient space.
    """
    if type(p) is not type(q):
        raise ValueError("class_distance requires both points on the same carrier")
    return min(math.dist(tuple(p), tuple(member)) for member in class_members(q, relation))
