"""Pydantic request/response models shared by the HTTP service and the CLI."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

Surface = Literal["mobius", "torus", "projective", "hemisphere", "rp2"]
EmbeddedSurface = Literal["mobius", "torus", "projective"]
BandSurface = Literal["mobius", "torus"]
ExportFormat = Literal["obj", "csv4d"]


class VerifyRequest(BaseModel):
    surface: Surface
    grid: int = Field(default=41, ge=3)
    samples: int = Field(default=500, ge=1)
    R: float = 3.0
    r: float = 1.0
    seed: int = 0
    tol_eq: Optional[float] = Field(default=None, gt=0)
    tol_rt: Optional[float] = Field(default=None, gt=0)
    tol_res: Optional[float] = Field(default=None, gt=0)


class CheckModel(BaseModel):
    name: str
    cases: int
    max_error: float
    tolerance: float
    passed: bool


class VerifyResponse(BaseModel):
    surface: Surface
    passed: bool
    checks: list[CheckModel]
    text: str
    csv: str


class InvertRequest(BaseModel):
    surface: EmbeddedSurface
    point: list[float]
    R: float = 3.0
    r: float = 1.0


class InvertResponse(BaseModel):
    surface: EmbeddedSurface
    relation: str
    representative: list[float]
    text: str


class SeamRequest(BaseModel):
    surface: BandSurface
    decades: list[int] = Field(default=[2, 3, 4])
    t: Optional[float] = None
    R: float = 3.0
    r: float = 1.0


class SeamRowModel(BaseModel):
    y: float
    gap: float
    ratio: Optional[float] = None


class SeamResponse(BaseModel):
    surface: BandSurface
    rows: list[SeamRowModel]
    passed: bool
    csv: str


class ExportRequest(BaseModel):
    surface: EmbeddedSurface
    format: Optional[ExportFormat] = None
    grid: int = Field(default=32, ge=3)
    samples: int = Field(default=500, ge=1)
    R: float = 3.0
    r: float = 1.0


class ExportResponse(BaseModel):
    surface: EmbeddedSurface
    format: ExportFormat
    content: str
    items: int
