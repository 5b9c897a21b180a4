"""Embedded-point containers and shared error types."""

from __future__ import annotations

import math
from dataclasses import dataclass


class NotOnSurfaceError(ValueError):
    """A point failed a surface-membership check."""


def coerce_floats(instance, *names: str) -> None:
    """Force the named fields of a frozen dataclass to float."""
    for name in names:
        object.__setattr__(instance, name, float(getattr(instance, name)))


@dataclass(frozen=True)
class Point3:
    """A point of R^3."""

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        coerce_floats(self, "x", "y", "z")
        if not all(math.isfinite(c) for c in (self.x, self.y, self.z)):
            raise ValueError("Point3 coordinates must be finite")

    def __iter__(self):
        yield from (self.x, self.y, self.z)


@dataclass(frozen=True)
class Point4:
    """A point of R^4, with coordinates named after the embedding monomials."""

    u: float
    v: float
    w: float
    t: float

    def __post_init__(self) -> None:
        coerce_floats(self, "u", "v", "w", "t")
        if not all(math.isfinite(c) for c in (self.u, self.v, self.w, self.t)):
            raise ValueError("Point4 coordinates must be finite")

    def __iter__(self):
        yield from (self.u, self.v, self.w, self.t)


def format_float(value: float) -> str:
    """Decimal text with 17 significant digits; round-trips IEEE doubles."""
    return format(float(value), ".17g")
