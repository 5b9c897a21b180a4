"""Real projective plane: square/hemisphere charts, the R^4 embedding, and its glued inverse.

Three models are wired together here.  The square [-1, 1]^2 with
boundary antipodes identified maps to the half-sphere model (the sphere
modulo the antipodal relation) through a sup-norm/Euclidean-norm
rescaling.  The sphere embeds into R^4 through the quadratic monomials
(xy, xz, y^2 - z^2, 2yz), which are blind to the antipodal flip.  The
inverse of the embedding is glued from five partial inverses, one per
coordinate that can be nonzero, plus the isolated image of (+-1, 0, 0).
The appendix model, lines through the origin of R^3, reduces to the
sphere by normalization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .angles import sign_pos
from .primitives import NotOnSurfaceError, Point4, coerce_floats
from .quotient import (
    ANTIPODAL,
    PROJECTIVE,
    ParamPoint,
    QuotientClass,
    SpherePoint,
    canonicalize,
    snap_to_unit_interval,
)
from .tolerances import TINY_ZERO, TOL_EQ, TOL_MEMBER, TOL_RES, TOL_RT

__all__ = [
    "ProjectivePoint",
    "BRANCHES",
    "square_to_hemisphere",
    "hemisphere_to_square",
    "embed",
    "implicit_residuals",
    "recovered_squares",
    "partial_inverse",
    "inverse",
    "rp2_normalize",
    "sphere_to_rp2",
]

# Dispatch order of the glued inverse: the all-zero point, then the first
# nonzero coordinate.  Overlapping branches agree at class level, so the
# order only pins down which round-off profile a given input sees.
BRANCHES = ("0", "u", "v", "w", "t")


@dataclass(frozen=True)
class ProjectivePoint:
    """Homogeneous coordinates (x : y : z); any nonzero scalar multiple names the same line."""

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        coerce_floats(self, "x", "y", "z")
        if not all(math.isfinite(c) for c in (self.x, self.y, self.z)):
            raise ValueError("homogeneous coordinates must be finite")
        if self.x == 0.0 and self.y == 0.0 and self.z == 0.0:
            raise ValueError("(0 : 0 : 0) is not a point")

    def __iter__(self):
        yield from (self.x, self.y, self.z)


def square_to_hemisphere(p: ParamPoint) -> QuotientClass:
    """Chart from the projective square to the half-sphere model.

    (a, b) maps to (s*a, s*b, sqrt(1 - max(|a|,|b|)^2)) with
    s = max-norm / 2-norm; the center (0, 0) goes to the pole (0, 0, 1),
    which is also the limit of the formula.  The result is canonicalized
    under the antipodal relation.
    """
    if p.polygon != PROJECTIVE:
        raise ValueError(f"expected a {PROJECTIVE!r} square point, got {p.polygon!r}")
    if abs(p.a) < TINY_ZERO and abs(p.b) < TINY_ZERO:
        return canonicalize(SpherePoint(0.0, 0.0, 1.0), ANTIPODAL)
    sup = max(abs(p.a), abs(p.b))
    scale = sup / math.hypot(p.a, p.b)
    return canonicalize(
        SpherePoint(scale * p.a, scale * p.b, math.sqrt(1.0 - sup * sup)), ANTIPODAL
    )


def hemisphere_to_square(s: SpherePoint) -> QuotientClass:
    """Chart from the half-sphere model back to the projective square.

    (x, y, z) maps to sign_pos(z) * (k*x, k*y) with k = 2-norm / max-norm
    of (x, y); the poles (0, 0, +-1) go to the square's center.  Inverse
    of ``square_to_hemisphere`` at class level.
    """
    if max(abs(s.x), abs(s.y)) < TINY_ZERO:
        return canonicalize(ParamPoint(0.0, 0.0, PROJECTIVE), PROJECTIVE)
    sup = max(abs(s.x), abs(s.y))
    scale = sign_pos(s.z) * math.hypot(s.x, s.y) / sup
    a = snap_to_unit_interval(scale * s.x, TOL_EQ)
    b = snap_to_unit_interval(scale * s.y, TOL_EQ)
    if a is None or b is None:
        raise ValueError(f"({s.x}, {s.y}, {s.z}) rescaled outside the square")
    return canonicalize(ParamPoint(a, b, PROJECTIVE), PROJECTIVE)


def embed(s: SpherePoint) -> Point4:
    """Quadratic-monomial embedding (xy, xz, y^2 - z^2, 2yz).

    Every monomial is even under the antipodal flip, so antipodes map to
    bit-identical images.
    """
    return Point4(s.x * s.y, s.x * s.z, s.y * s.y - s.z * s.z, 2.0 * s.y * s.z)


def implicit_residuals(q: Point4) -> tuple[float, float]:
    """Residuals of the two polynomial identities satisfied on the embedded surface.

    (2uvw - (u^2 - v^2) t,  (vt + 2uw)(1 - w) - u(t^2 + 2u^2)); both
    vanish on the image.  Whether their common zero set is exactly the
    image is unsettled, so membership additionally re-embeds.
    """
    u, v, w, t = q.u, q.v, q.w, q.t
    first = 2.0 * u * v * w - (u * u - v * v) * t
    second = (v * t + 2.0 * u * w) * (1.0 - w) - u * (t * t + 2.0 * u * u)
    return (first, second)


def _clamped_square(value: float, label: str) -> float:
    """Validate a recovered squared coordinate, absorbing round-off at the ends."""
    if value < -TOL_RES or value > 1.0 + TOL_RES:
        raise NotOnSurfaceError(f"recovered {label}^2 = {value!r} leaves [0, 1]")
    if value < 0.0:
        return 0.0
    return value


def recovered_squares(q: Point4, branch: str) -> tuple[float, float, float]:
    """(x^2, y^2, z^2) of any preimage of q, from the branch whose coordinate is nonzero.

    u-branch: (1 - w - vt/u, vt/2u + w, vt/2u)
    v-branch: (1 + w - ut/v, ut/2v, ut/2v - w)
    w-branch: ((u^2 - v^2)/w, (1 + w - (u^2 - v^2)/w)/2, (1 - w - (u^2 - v^2)/w)/2)
    t-branch: (2uv/t, (1 + w - 2uv/t)/2, (1 - w - 2uv/t)/2)

    Components are clamped to 0 when round-off pushes them within TOL_RES
    below it; anything further out raises ``NotOnSurfaceError``.
    """
    u, v, w, t = q.u, q.v, q.w, q.t
    if branch == "u":
        if u == 0.0:
            raise ValueError("u-branch requires u != 0")
        ratio = v * t / (2.0 * u)
        squares = (1.0 - w - 2.0 * ratio, ratio + w, ratio)
    elif branch == "v":
        if v == 0.0:
            raise ValueError("v-branch requires v != 0")
        ratio = u * t / (2.0 * v)
        squares = (1.0 + w - 2.0 * ratio, ratio, ratio - w)
    elif branch == "w":
        if w == 0.0:
            raise ValueError("w-branch requires w != 0")
        ratio = (u * u - v * v) / w
        squares = (ratio, 0.5 * (1.0 + w - ratio), 0.5 * (1.0 - w - ratio))
    elif branch == "t":
        if t == 0.0:
            raise ValueError("t-branch requires t != 0")
        ratio = 2.0 * u * v / t
        squares = (ratio, 0.5 * (1.0 + w - ratio), 0.5 * (1.0 - w - ratio))
    else:
        raise ValueError(f"unknown branch {branch!r}")
    labels = ("x", "y", "z")
    return tuple(_clamped_square(val, lab) for val, lab in zip(squares, labels))


def partial_inverse(q: Point4, branch: str) -> SpherePoint:
    """One chart of the glued inverse, valid where the branch coordinate is nonzero.

    Signs follow the sign_pos convention (sign of 0 is +1): the u, v and
    w branches return (|x|, sign(u)|y|, sign(v)|z|); the t branch returns
    (sign(v)|x|, sign(t)|y|, |z|); branch "0" is the isolated preimage
    (1, 0, 0) of the origin.
    """
    if branch == "0":
        if (q.u, q.v, q.w, q.t) != (0.0, 0.0, 0.0, 0.0):
            raise ValueError("branch '0' only applies to the origin of R^4")
        return SpherePoint(1.0, 0.0, 0.0)
    sx, sy, sz = (math.sqrt(value) for value in recovered_squares(q, branch))
    if branch in ("u", "v", "w"):
        return SpherePoint(sx, sign_pos(q.u) * sy, sign_pos(q.v) * sz)
    return SpherePoint(sign_pos(q.v) * sx, sign_pos(q.t) * sy, sz)


def inverse(q: Point4) -> QuotientClass:
    """Glued right inverse of ``embed``, canonicalized under the antipodal relation.

    Dispatch: the origin goes to branch "0"; otherwise the first nonzero
    coordinate in the order (u, v, w, t) selects the chart.  Membership
    policy: both implicit residuals within TOL_MEMBER, recovered squares
    within the clamping envelope, and re-embedding within TOL_RT.
    """
    first, second = implicit_residuals(q)
    if abs(first) > TOL_MEMBER or abs(second) > TOL_MEMBER:
        raise NotOnSurfaceError(f"implicit residuals ({first!r}, {second!r}) exceed {TOL_MEMBER}")
    branch = "0"
    for name in ("u", "v", "w", "t"):
        if getattr(q, name) != 0.0:
            branch = name
            break
    try:
        candidate = partial_inverse(q, branch)
    except ValueError as exc:
        raise NotOnSurfaceError(str(exc)) from exc
    image = embed(candidate)
    gap = max(abs(a - b) for a, b in zip(image, q))
    if gap > TOL_RT:
        raise NotOnSurfaceError(f"re-embedding misses the input by {gap!r}")
    return canonicalize(candidate, ANTIPODAL)


def rp2_normalize(p: ProjectivePoint) -> QuotientClass:
    """Send a line through the origin to its antipodal class of unit directions.

    Invariant under rescaling by any nonzero factor, which is exactly the
    collinearity relation the homogeneous coordinates quotient by.
    """
    norm = math.hypot(p.x, p.y, p.z)
    return canonicalize(SpherePoint(p.x / norm, p.y / norm, p.z / norm), ANTIPODAL)


def sphere_to_rp2(s: SpherePoint) -> ProjectivePoint:
    """Read a unit vector as homogeneous coordinates; inverse of ``rp2_normalize`` at class level."""
    return ProjectivePoint(s.x, s.y, s.z)
