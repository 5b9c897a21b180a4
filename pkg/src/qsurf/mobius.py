"""Mobius band: embedding into R^3, implicit residual, explicit inverse, seam diagnostics.

The band is the image of the square [-1, 1]^2 under a half-twist tube
map, with the gluing (t, -1) ~ (-t, 1).  Coordinates: t moves across the
band's width, v along its length.  The inverse recovers (t, v) from an
embedded point using the branch-explicit polar angle; ``seam_gap``
measures how fast the generic inverse branch approaches its closed-form
limit at the seam y = 0, x > 0.
"""

from __future__ import annotations

import math

from .angles import atan2_principal
from .primitives import NotOnSurfaceError, Point3
from .quotient import MOBIUS, ParamPoint, snap_to_unit_interval
from .tolerances import TINY_ZERO, TOL_EQ, TOL_MEMBER, TOL_RT

__all__ = ["embed", "implicit_residual", "z_roots", "inverse", "seam_gap"]


def _require_mobius(p: ParamPoint) -> None:
    if p.polygon != MOBIUS:
        raise ValueError(f"expected a {MOBIUS!r} square point, got {p.polygon!r}")


def embed(p: ParamPoint) -> Point3:
    """Map square coordinates (t, v) onto the band.

    (t, v) -> ((1 + (t/2) cos(v pi/2)) cos(v pi),
               (1 + (t/2) cos(v pi/2)) sin(v pi),
               (t/2) sin(v pi/2))
    """
    _require_mobius(p)
    t, v = p.a, p.b
    half_angle = 0.5 * v * math.pi
    radial = 1.0 + 0.5 * t * math.cos(half_angle)
    return Point3(
        radial * math.cos(v * math.pi),
        radial * math.sin(v * math.pi),
        0.5 * t * math.sin(half_angle),
    )


def implicit_residual(q: Point3) -> float:
    """Residual of the band's cartesian equation y(x^2+y^2+z^2-1) - 2z(x^2+y^2+x).

    Vanishes on the band, but its zero set is strictly larger (the whole
    z-axis satisfies it, for one), so a small residual alone never
    certifies membership; ``inverse`` re-embeds to decide.
    """
    rho = q.x * q.x + q.y * q.y
    return q.y * (rho + q.z * q.z - 1.0) - 2.0 * q.z * (rho + q.x)


def z_roots(x: float, y: float) -> tuple[float, float]:
    """Both solutions z of the cartesian equation at fixed (x, y), y != 0.

    Returns ((s + d)/y, (s - d)/y) with s = x^2 + y^2 + x and
    d = (x + 1) sqrt(x^2 + y^2); on the band x >= -1, so d >= 0 and the
    roots coincide at x = -1.  Which root matches a given surface point
    must be decided by comparing against a known z, not by a fixed sign.
    """
    if y == 0.0:
        raise ValueError("z_roots requires y != 0")
    rho = x * x + y * y
    s = rho + x
    d = (x + 1.0) * math.sqrt(rho)
    return ((s + d) / y, (s - d) / y)


def inverse(q: Point3) -> ParamPoint:
    """Right inverse of ``embed``: square coordinates whose embedding reproduces q.

    v' is the polar angle of (x, y) over pi; t' is 2(x - 1) on the seam
    (y = 0, x > 0) and 2z / sin(angle/2) elsewhere.  Membership policy:
    the implicit residual must stay within TOL_MEMBER, the recovered
    parameters must lie in [-1, 1]^2 after TOL_EQ edge clamping, and
    re-embedding must reproduce q within TOL_RT; otherwise
    ``NotOnSurfaceError`` is raised.
    """
    x, z = q.x, q.z
    y = 0.0 if abs(q.y) < TINY_ZERO else q.y
    if x == 0.0 and y == 0.0:
        raise NotOnSurfaceError("the z-axis does not meet the band")
    if abs(implicit_residual(q)) > TOL_MEMBER:
        raise NotOnSurfaceError(f"implicit residual {implicit_residual(q)!r} exceeds {TOL_MEMBER}")
    angle = atan2_principal(y, x)
    if angle == 0.0:
        t_raw = 2.0 * (x - 1.0)
    else:
        t_raw = 2.0 * z / math.sin(0.5 * angle)
    t = snap_to_unit_interval(t_raw, TOL_EQ)
    v = snap_to_unit_interval(angle / math.pi, TOL_EQ)
    if t is None or v is None:
        raise NotOnSurfaceError(f"recovered parameters ({t_raw}, {angle / math.pi}) leave the square")
    result = ParamPoint(t, v, MOBIUS)
    image = embed(result)
    gap = max(abs(image.x - q.x), abs(image.y - q.y), abs(image.z - q.z))
    if gap > TOL_RT:
        raise NotOnSurfaceError(f"re-embedding misses the input by {gap!r}")
    return result


def seam_gap(x: float, y: float, z: float) -> float:
    """|2z / sin(angle/2) - 2(x - 1)| for a band point near the seam.

    The generic inverse branch converges to the seam value 2(x - 1) as
    y -> 0 with x > 0; on embedded points the gap decays quadratically
    in y.  Requires x > 0, y != 0, and a point on the band.
    """
    if y == 0.0:
        raise ValueError("seam_gap requires y != 0")
    if x <= 0.0:
        raise ValueError("seam_gap requires x > 0")
    point = Point3(x, y, z)
    if abs(implicit_residual(point)) > TOL_MEMBER:
        raise ValueError("seam_gap requires a point on the band")
    angle = atan2_principal(y, x)
    return abs(2.0 * z / math.sin(0.5 * angle) - 2.0 * (x - 1.0))
