"""Branch-explicit two-argument arctangent and sign helpers.

Everything downstream depends on one specific convention: the polar
angle lies in (-pi, pi], with the negative x-axis mapped to +pi, never
-pi.  Platform ``atan2`` intrinsics disagree about signed zeros and the
branch cut, so the angle is assembled from single-argument ``atan`` plus
explicit branch logic.
"""

from __future__ import annotations

import math

__all__ = ["atan2_principal", "sin_arctan", "sign_strict", "sign_pos"]


def sign_strict(x: float) -> int:
    """Sign of a nonzero number: -1 for x < 0, +1 for x > 0.

    Raises ``ValueError`` at 0 (including -0.0, which compares equal to 0).
    """
    if x == 0.0:
        raise ValueError("sign_strict is undefined at 0")
    return -1 if x < 0.0 else 1


def sign_pos(x: float) -> int:
    """Sign with the zero convention sign_pos(0) = +1."""
    return 1 if x >= 0.0 else -1


def atan2_principal(y: float, x: float) -> float:
    """Polar angle of the point (x, y), in (-pi, pi].

    Branches:

    * ``y == 0``: 0 for x > 0, pi for x < 0
    * ``x == 0``: sign_strict(y) * pi/2
    * ``x > 0``:  atan(y/x)
    * ``x < 0``:  atan(y/x) + sign_strict(y) * pi

    Negative zeros take the corresponding zero branch.  Raises
    ``ValueError`` at the origin, where no angle exists.  The map is
    discontinuous across the negative x-axis: approaching from y > 0
    gives +pi, from y < 0 gives -pi, while the axis itself carries +pi.
    """
    if x == 0.0 and y == 0.0:
        raise ValueError("atan2_principal is undefined at the origin")
    if y == 0.0:
        return 0.0 if x > 0.0 else math.pi
    if x == 0.0:
        return sign_strict(y) * (0.5 * math.pi)
    base = math.atan(y / x)
    if x > 0.0:
        return base
    angle = base + sign_strict(y) * math.pi
    # For y < 0 vanishingly close to the negative x-axis the sum can round
    # to exactly -pi; fold that onto the +pi side of the branch cut so the
    # (-pi, pi] contract survives rounding.
    if angle == -math.pi:
        return math.pi
    return angle


def sin_arctan(x: float) -> float:
    """sin(arctan(x)), evaluated in closed form as x / sqrt(1 + x^2)."""
    return x / math.hypot(1.0, x)
