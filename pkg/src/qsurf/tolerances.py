"""Central numerical tolerances.

Every comparison in the package routes through these constants (or an
explicit `Tolerances` override), so verification reports can state
exactly which thresholds were applied.
"""

from __future__ import annotations

from dataclasses import dataclass

# Coordinatewise equality of canonical representatives and class-level
# identities.  Three orders of magnitude above accumulated double-precision
# round-off for the O(1)-scale maps in this package.
TOL_EQ = 1e-9

# Embed -> invert -> re-embed round-trip error (max-abs over coordinates).
TOL_RT = 1e-9

# Implicit-equation residual on exactly embedded points.
TOL_RES = 1e-12

# Implicit residual accepted by surface-membership tests (looser than
# TOL_RES: membership must admit points perturbed at the TOL_RT scale).
TOL_MEMBER = 1e-8

# Magnitudes below this collapse to exact zero in branch selection, so the
# closed-form seam branches are taken instead of dividing by a subnormal.
TINY_ZERO = 1e-300


@dataclass(frozen=True)
class Tolerances:
    """Bundle of override-able thresholds used by the verify suites."""

    eq: float = TOL_EQ
    rt: float = TOL_RT
    res: float = TOL_RES
    member: float = TOL_MEMBER

    def __post_init__(self) -> None:
        for name in ("eq", "rt", "res", "member"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"tolerance {name!r} must be positive")


DEFAULT_TOLERANCES = Tolerances()
