"""2-torus: embedding into R^3, implicit residual, explicit inverse, seam diagnostics.

The torus square glues opposite edges without flips; u travels along the
tube, v around it.  The inverse needs three branches because the polar
angle of (x, y) is discontinuous where the tube crosses y = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .angles import atan2_principal
from .primitives import NotOnSurfaceError, Point3, coerce_floats
from .quotient import TORUS, ParamPoint, snap_to_unit_interval
from .tolerances import TINY_ZERO, TOL_EQ, TOL_MEMBER, TOL_RT

__all__ = ["TorusGeometry", "DEFAULT_GEOMETRY", "embed", "implicit_residual", "inverse", "seam_gap"]


@dataclass(frozen=True)
class TorusGeometry:
    """Major/minor radius pair with R > r > 0."""

    R: float
    r: float

    def __post_init__(self) -> None:
        coerce_floats(self, "R", "r")
        if not (self.R > self.r > 0.0):
            raise ValueError(f"torus geometry requires R > r > 0, got R={self.R}, r={self.r}")


DEFAULT_GEOMETRY = TorusGeometry(3.0, 1.0)


def _residual_scale(geom: TorusGeometry) -> float:
    # The residual is quadratic in the coordinates, so tolerances scale with R^2.
    return max(1.0, geom.R * geom.R)


def embed(p: ParamPoint, geom: TorusGeometry = DEFAULT_GEOMETRY) -> Point3:
    """(u, v) -> ((R + r cos(v pi)) cos(u pi), (R + r cos(v pi)) sin(u pi), r sin(v pi))."""
    if p.polygon != TORUS:
        raise ValueError(f"expected a {TORUS!r} square point, got {p.polygon!r}")
    u, v = p.a, p.b
    ring = geom.R + geom.r * math.cos(v * math.pi)
    return Point3(ring * math.cos(u * math.pi), ring * math.sin(u * math.pi), geom.r * math.sin(v * math.pi))


def implicit_residual(q: Point3, geom: TorusGeometry = DEFAULT_GEOMETRY) -> float:
    """Residual of the cartesian equation (sqrt(x^2 + y^2) - R)^2 + z^2 - r^2."""
    ring = math.hypot(q.x, q.y) - geom.R
    return ring * ring + q.z * q.z - geom.r * geom.r


def inverse(q: Point3, geom: TorusGeometry = DEFAULT_GEOMETRY) -> ParamPoint:
    """Right inverse of ``embed``.

    u' is the polar angle of (x, y) over pi.  v' is the polar angle of
    (radial offset, z), where the radial offset is x - R on the u' = 0
    seam, -x - R on the u' = 1 seam, and y / sin(u' pi) - R in general.
    Membership mirrors the Mobius policy with the residual tolerance
    scaled by max(1, R^2).
    """
    x, z = q.x, q.z
    y = 0.0 if abs(q.y) < TINY_ZERO else q.y
    if abs(implicit_residual(q, geom)) > TOL_MEMBER * _residual_scale(geom):
        raise NotOnSurfaceError(
            f"implicit residual {implicit_residual(q, geom)!r} exceeds {TOL_MEMBER * _residual_scale(geom)}"
        )
    try:
        angle_u = atan2_principal(y, x)
        if angle_u == 0.0:
            angle_v = atan2_principal(z, x - geom.R)
        elif angle_u == math.pi:
            angle_v = atan2_principal(z, -x - geom.R)
        else:
            angle_v = atan2_principal(z, y / math.sin(angle_u) - geom.R)
    except ValueError as exc:
        raise NotOnSurfaceError(str(exc)) from exc
    u = snap_to_unit_interval(angle_u / math.pi, TOL_EQ)
    v = snap_to_unit_interval(angle_v / math.pi, TOL_EQ)
    if u is None or v is None:
        raise NotOnSurfaceError("recovered parameters leave the square")
    result = ParamPoint(u, v, TORUS)
    image = embed(result, geom)
    gap = max(abs(image.x - q.x), abs(image.y - q.y), abs(image.z - q.z))
    if gap > TOL_RT:
        raise NotOnSurfaceError(f"re-embedding misses the input by {gap!r}")
    return result


def seam_gap(q: Point3, geom: TorusGeometry = DEFAULT_GEOMETRY) -> float:
    """|y / sin(polar angle of (x, y)) - |x|| for a torus point near the y = 0 seam.

    The quotient y / sin(angle) equals the cylindrical radius
    sqrt(x^2 + y^2) wherever it is defined, so on embedded points the
    gap decays quadratically in y.  Requires x != 0, y != 0, and a point
    on the torus.
    """
    if q.y == 0.0:
        raise ValueError("seam_gap requires y != 0")
    if q.x == 0.0:
        raise ValueError("seam_gap requires x != 0")
    if abs(implicit_residual(q, geom)) > TOL_MEMBER * _residual_scale(geom):
        raise ValueError("seam_gap requires a point on the torus")
    return abs(q.y / math.sin(atan2_principal(q.y, q.x)) - abs(q.x))
