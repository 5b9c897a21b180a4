"""Deterministic point sets on the unit sphere."""

from __future__ import annotations

import math
from itertools import product

from .quotient import SpherePoint

__all__ = ["fibonacci_sphere", "special_sphere_points"]

_GOLDEN_ANGLE = math.pi * (3.0 - math.sqrt(5.0))


def fibonacci_sphere(count: int) -> list[SpherePoint]:
    """Near-uniform Fibonacci-lattice sample of the sphere.

    Deterministic; points avoid the poles and, in general position, every
    coordinate plane.  For ``count`` = 1 the single point is (1, 0, 0).
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    points = []
    for i in range(count):
        z = 1.0 - (2.0 * i + 1.0) / count
        radius = math.sqrt(max(0.0, 1.0 - z * z))
        phi = i * _GOLDEN_ANGLE
        points.append(SpherePoint(radius * math.cos(phi), radius * math.sin(phi), z))
    return points


def special_sphere_points() -> list[SpherePoint]:
    """The 26 normalized sign directions of {-1, 0, 1}^3 minus the origin.

    Axes, edge diagonals, and corner diagonals: together they hit every
    zero-coordinate pattern the embedding's case analysis branches on,
    and the list is closed under the antipodal flip.
    """
    points = []
    for direction in product((-1.0, 0.0, 1.0), repeat=3):
        if direction == (0.0, 0.0, 0.0):
            continue
        points.append(SpherePoint.unit(*direction))
    return points
