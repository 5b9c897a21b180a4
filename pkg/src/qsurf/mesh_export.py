"""Sample the parameter squares, weld seam vertices, and emit meshes or point clouds.

Welding is driven entirely by the quotient machinery: two grid nodes
share a mesh vertex exactly when their canonical representatives agree,
so the emitted mesh realizes the glued surface rather than the flat
square.  R^3 surfaces go to Wavefront OBJ; the R^4 projective embedding
has no standard mesh format and is emitted as a CSV point cloud.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import TextIO

from . import mobius, projective
from . import torus as torus_mod
from .primitives import Point3, format_float
from .quotient import MOBIUS, TORUS, ParamPoint, canonicalize
from .sampling import fibonacci_sphere
from .torus import TorusGeometry

__all__ = [
    "WeldedMesh",
    "build_mesh",
    "euler_characteristic",
    "boundary_loops",
    "write_obj",
    "read_obj",
    "write_point_cloud_4d",
]


@dataclass
class WeldedMesh:
    """Triangulated surface sample with seam vertices merged.

    ``weld_map`` sends each (i, j) grid node to its vertex index; nodes
    whose parameters are glued share an index.
    """

    vertices: list[Point3]
    faces: list[tuple[int, int, int]]
    weld_map: dict[tuple[int, int], int]


def build_mesh(surface: str, n: int, geom: TorusGeometry | None = None) -> WeldedMesh:
    """Triangulate an (n+1) x (n+1) parameter grid and weld glued nodes.

    Axis values are (2i - n)/n so a node's negation is bit-exactly
    another node, which makes welding by canonical representative exact.
    Each grid cell splits into two triangles along its (i, j) ->
    (i+1, j+1) diagonal.  The torus mesh is closed; the Mobius mesh keeps
    its t = +-1 edges as free boundary.
    """
    if surface not in (MOBIUS, TORUS):
        raise ValueError(f"meshes exist for {MOBIUS!r} and {TORUS!r} only, got {surface!r}")
    if n < 3:
        raise ValueError("mesh grid needs n >= 3 cells per axis")
    geom = geom or TorusGeometry(3.0, 1.0)
    axis = [(2 * i - n) / n for i in range(n + 1)]

    vertices: list[Point3] = []
    index_of: dict[tuple[float, float], int] = {}
    weld_map: dict[tuple[int, int], int] = {}
    for j, b in enumerate(axis):
        for i, a in enumerate(axis):
            rep = canonicalize(ParamPoint(a, b, surface), surface).representative
            key = (rep.a, rep.b)
            index = index_of.get(key)
            if index is None:
                index = len(vertices)
                index_of[key] = index
                if surface == MOBIUS:
                    vertices.append(mobius.embed(rep))
                else:
                    vertices.append(torus_mod.embed(rep, geom))
            weld_map[(i, j)] = index

    faces: list[tuple[int, int, int]] = []
    for j in range(n):
        for i in range(n):
            v00 = weld_map[(i, j)]
            v10 = weld_map[(i + 1, j)]
            v11 = weld_map[(i + 1, j + 1)]
            v01 = weld_map[(i, j + 1)]
            faces.append((v00, v10, v11))
            faces.append((v00, v11, v01))
    return WeldedMesh(vertices, faces, weld_map)


def _edge_counts(mesh: WeldedMesh) -> dict[tuple[int, int], int]:
    counts: dict[tuple[int, int], int] = {}
    for face in mesh.faces:
        for a, b in ((face[0], face[1]), (face[1], face[2]), (face[2], face[0])):
            edge = (a, b) if a < b else (b, a)
            counts[edge] = counts.get(edge, 0) + 1
    return counts


def euler_characteristic(mesh: WeldedMesh) -> int:
    """V - E + F of the welded mesh (0 for both the torus and the band)."""
    return len(mesh.vertices) - len(_edge_counts(mesh)) + len(mesh.faces)


def boundary_loops(mesh: WeldedMesh) -> list[list[int]]:
    """Vertex cycles of the mesh boundary (edges used by exactly one face).

    A closed mesh returns no loops; the Mobius band returns its single
    boundary circle.
    """
    boundary_edges = [edge for edge, count in _edge_counts(mesh).items() if count == 1]
    neighbors: dict[int, list[int]] = {}
    for a, b in boundary_edges:
        neighbors.setdefault(a, []).append(b)
        neighbors.setdefault(b, []).append(a)
    loops: list[list[int]] = []
    visited: set[int] = set()
    for start in sorted(neighbors):
        if start in visited:
            continue
        loop = [start]
        visited.add(start)
        current = start
        while True:
            step = next((v for v in neighbors[current] if v not in visited), None)
            if step is None:
                break
            loop.append(step)
            visited.add(step)
            current = step
        loops.append(loop)
    return loops


def _write_text(destination: str | Path | TextIO, text: str) -> None:
    if hasattr(destination, "write"):
        destination.write(text)
    else:
        Path(destination).write_text(text, encoding="utf-8")


def write_obj(mesh: WeldedMesh, destination: str | Path | TextIO) -> None:
    """Write Wavefront OBJ text: only "v x y z" and 1-based "f i j k" records.

    Coordinates carry 17 significant digits, so a re-parse reproduces
    them bit-exactly.
    """
    lines = [f"v {format_float(p.x)} {format_float(p.y)} {format_float(p.z)}" for p in mesh.vertices]
    lines += [f"f {a + 1} {b + 1} {c + 1}" for a, b, c in mesh.faces]
    _write_text(destination, "\n".join(lines) + "\n")


def read_obj(source: str | Path | TextIO) -> tuple[list[Point3], list[tuple[int, int, int]]]:
    """Parse the OBJ subset emitted by ``write_obj``."""
    if hasattr(source, "read"):
        text = source.read()
    else:
        text = Path(source).read_text(encoding="utf-8")
    vertices: list[Point3] = []
    faces: list[tuple[int, int, int]] = []
    for line in text.splitlines():
        if not line:
            continue
        tag, *fields = line.split()
        if tag == "v":
            vertices.append(Point3(*(float(value) for value in fields)))
        elif tag == "f":
            a, b, c = (int(value) - 1 for value in fields)
            faces.append((a, b, c))
        else:
            raise ValueError(f"unexpected OBJ record {tag!r}")
    return vertices, faces


def write_point_cloud_4d(n_samples: int, destination: str | Path | TextIO) -> None:
    """CSV point cloud of the projective embedding over a Fibonacci sphere sample.

    Header "u,v,w,t", one row per sample, 17 significant digits,
    deterministic for a given sample count.
    """
    if n_samples < 1:
        raise ValueError("n_samples must be at least 1")
    lines = ["u,v,w,t"]
    for point in fibonacci_sphere(n_samples):
        image = projective.embed(point)
        lines.append(",".join(format_float(value) for value in image))
    _write_text(destination, "\n".join(lines) + "\n")
