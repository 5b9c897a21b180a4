"""FastAPI wiring around the service handlers.

Run with: uvicorn qsurf.service.app:app
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..primitives import NotOnSurfaceError
from . import api, models

app = FastAPI(
    title="qsurf",
    description=(
        "Glued-square surfaces: verification suites, explicit inverse maps, "
        "seam studies, and mesh/point-cloud export"
    ),
)


@app.exception_handler(api.RequestError)
async def _request_error(_: Request, exc: api.RequestError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.exception_handler(NotOnSurfaceError)
async def _not_on_surface(_: Request, exc: NotOnSurfaceError) -> JSONResponse:
    return JSONResponse(status_code=422, content={"detail": f"not on surface: {exc}"})


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/verify", response_model=models.VerifyResponse)
def verify(request: models.VerifyRequest) -> models.VerifyResponse:
    return api.run_verify(request)


@app.post("/invert", response_model=models.InvertResponse)
def invert(request: models.InvertRequest) -> models.InvertResponse:
    return api.run_invert(request)


@app.post("/seam", response_model=models.SeamResponse)
def seam(request: models.SeamRequest) -> models.SeamResponse:
    return api.run_seam(request)


@app.post("/export", response_model=models.ExportResponse)
def export(request: models.ExportRequest) -> models.ExportResponse:
    return api.run_export(request)
