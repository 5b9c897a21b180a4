"""Glued-square surfaces: embeddings, explicit inverses, and numerical verification.

The Mobius band, the 2-torus, and the real projective plane each arise
from the square [-1, 1]^2 with edges identified.  This package provides
the forward parametrizations into R^3 (R^4 for the projective plane),
branch-correct explicit inverses, the quotient relations with canonical
representatives, and property suites that certify the whole construction
numerically.
"""

from . import mesh_export, mobius, projective, sampling, torus, verify
from .angles import atan2_principal, sign_pos, sign_strict, sin_arctan
from .primitives import NotOnSurfaceError, Point3, Point4, format_float
from .quotient import (
    ANTIPODAL,
    MOBIUS,
    PROJECTIVE,
    TORUS,
    ParamPoint,
    QuotientClass,
    SpherePoint,
    canonicalize,
    class_distance,
    class_members,
    related_antipodal,
    related_mobius,
    related_projective,
    related_torus,
)
from .tolerances import DEFAULT_TOLERANCES, TOL_EQ, TOL_MEMBER, TOL_RES, TOL_RT, Tolerances
from .torus import TorusGeometry

__version__ = "0.1.0"

__all__ = [
    "ANTIPODAL",
    "DEFAULT_TOLERANCES",
    "MOBIUS",
    "NotOnSurfaceError",
    "PROJECTIVE",
    "ParamPoint",
    "Point3",
    "Point4",
    "QuotientClass",
    "SpherePoint",
    "TORUS",
    "TOL_EQ",
    "TOL_MEMBER",
    "TOL_RES",
    "TOL_RT",
    "Tolerances",
    "TorusGeometry",
    "atan2_principal",
    "canonicalize",
    "class_distance",
    "class_members",
    "format_float",
    "mesh_export",
    "mobius",
    "projective",
    "related_antipodal",
    "related_mobius",
    "related_projective",
    "related_torus",
    "sampling",
    "sign_pos",
    "sign_strict",
    "sin_arctan",
    "torus",
    "verify",
]
