"""Service handlers: pure functions from request models to response models.

Both front ends route through these: the FastAPI app wraps them in HTTP,
the CLI calls them in-process.  Usage-level problems raise
``RequestError``; domain failures surface as ``NotOnSurfaceError`` from
the geometry layer.
"""

from __future__ import annotations

import io

from .. import mesh_export, mobius, projective, verify
from .. import torus as torus_mod
from ..primitives import Point3, Point4, format_float
from ..quotient import QuotientClass, canonicalize
from ..tolerances import DEFAULT_TOLERANCES, Tolerances
from ..torus import TorusGeometry
from . import models


class RequestError(ValueError):
    """The request is structurally valid but names an unusable combination."""


def _geometry(R: float, r: float) -> TorusGeometry:
    try:
        return TorusGeometry(R, r)
    except ValueError as exc:
        raise RequestError(str(exc)) from exc


def _tolerances(req: models.VerifyRequest) -> Tolerances:
    return Tolerances(
        eq=req.tol_eq if req.tol_eq is not None else DEFAULT_TOLERANCES.eq,
        rt=req.tol_rt if req.tol_rt is not None else DEFAULT_TOLERANCES.rt,
        res=req.tol_res if req.tol_res is not None else DEFAULT_TOLERANCES.res,
        member=DEFAULT_TOLERANCES.member,
    )


def run_verify(req: models.VerifyRequest) -> models.VerifyResponse:
    geom = _geometry(req.R, req.r)
    report = verify.run_suite(
        req.surface,
        grid=verify.GridSpec(req.grid),
        geom=geom,
        samples=req.samples,
        seed=req.seed,
        tol=_tolerances(req),
    )
    checks = [
        models.CheckModel(
            name=check.name,
            cases=check.cases,
            max_error=check.max_error,
            tolerance=check.tolerance,
            passed=check.passed,
        )
        for check in report.checks
    ]
    return models.VerifyResponse(
        surface=req.surface,
        passed=report.passed,
        checks=checks,
        text=report.to_text(),
        csv=report.to_csv(),
    )


def _class_text(cls: QuotientClass) -> tuple[list[float], str]:
    coords = [float(value) for value in cls.representative]
    rendered = ", ".join(format_float(value) for value in coords)
    if cls.relation == "antipodal":
        return coords, f"class ({rendered})"
    return coords, f"({rendered})"


def run_invert(req: models.InvertRequest) -> models.InvertResponse:
    arity = 4 if req.surface == "projective" else 3
    if len(req.point) != arity:
        raise RequestError(f"surface {req.surface!r} needs {arity} coordinates, got {len(req.point)}")
    try:
        point = Point4(*req.point) if arity == 4 else Point3(*req.point)
    except ValueError as exc:
        raise RequestError(str(exc)) from exc
    if req.surface == "projective":
        cls = projective.inverse(point)
    else:
        if req.surface == "mobius":
            recovered = mobius.inverse(point)
        else:
            recovered = torus_mod.inverse(point, _geometry(req.R, req.r))
        cls = canonicalize(recovered, recovered.polygon)
    coords, text = _class_text(cls)
    return models.InvertResponse(
        surface=req.surface, relation=cls.relation, representative=coords, text=text
    )


def run_seam(req: models.SeamRequest) -> models.SeamResponse:
    geom = _geometry(req.R, req.r)
    try:
        rows = verify.seam_study(req.surface, req.decades, geom=geom, t=req.t)
    except ValueError as exc:
        raise RequestError(str(exc)) from exc
    passed = verify.seam_ratios_certified(rows, req.decades)
    return models.SeamResponse(
        surface=req.surface,
        rows=[models.SeamRowModel(y=row.y, gap=row.gap, ratio=row.ratio) for row in rows],
        passed=passed,
        csv=verify.seam_csv(rows),
    )


def run_export(req: models.ExportRequest) -> models.ExportResponse:
    fmt = req.format or ("csv4d" if req.surface == "projective" else "obj")
    if fmt == "obj" and req.surface == "projective":
        raise RequestError("the projective surface lives in R^4; export it as csv4d")
    if fmt == "csv4d" and req.surface != "projective":
        raise RequestError("csv4d export applies to the projective surface only")
    buffer = io.StringIO()
    if fmt == "obj":
        mesh = mesh_export.build_mesh(req.surface, req.grid, _geometry(req.R, req.r))
        mesh_export.write_obj(mesh, buffer)
        items = len(mesh.vertices)
    else:
        mesh_export.write_point_cloud_4d(req.samples, buffer)
        items = req.samples
    return models.ExportResponse(surface=req.surface, format=fmt, content=buffer.getvalue(), items=items)
