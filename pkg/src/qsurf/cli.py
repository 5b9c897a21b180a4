"""Command-line front end: a thin client over the service handlers.

Flags are parsed into the same pydantic request models the HTTP service
accepts, responses are rendered to stdout, and files requested with
--out are written locally from the returned payload.

Exit codes: 0 success or all checks passed, 1 domain failure (a check
failed, the point is not on the surface, I/O trouble), 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from pydantic import ValidationError

from .primitives import NotOnSurfaceError
from .service import api, models

_ALL_SURFACES = ("mobius", "torus", "projective", "hemisphere", "rp2")
_EMBEDDED = ("mobius", "torus", "projective")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsurf",
        description="Verify, invert, probe, and export the glued-square surfaces.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", help="Run a surface's property suite.")
    verify.add_argument("--surface", required=True, choices=_ALL_SURFACES)
    verify.add_argument("--grid", type=int, default=41, help="Points per axis of the parameter grid.")
    verify.add_argument("--samples", type=int, default=500, help="Fibonacci sphere sample count.")
    verify.add_argument("--R", type=float, default=3.0, help="Torus major radius.")
    verify.add_argument("--r", type=float, default=1.0, help="Torus minor radius.")
    verify.add_argument("--seed", type=int, default=0, help="Seed for the relation spot-check sampling.")
    verify.add_argument("--tol-eq", type=float, default=None, help="Override the class-equality tolerance.")
    verify.add_argument("--tol-rt", type=float, default=None, help="Override the round-trip tolerance.")
    verify.add_argument("--tol-res", type=float, default=None, help="Override the residual tolerance.")

    invert = commands.add_parser("invert", help="Recover square/sphere parameters of an embedded point.")
    invert.add_argument("--surface", required=True, choices=_EMBEDDED)
    invert.add_argument("--point", required=True, help="Comma-separated coordinates (3 or 4 values).")
    invert.add_argument("--R", type=float, default=3.0)
    invert.add_argument("--r", type=float, default=1.0)

    seam = commands.add_parser("seam", help="Measure seam-gap decay across parameter decades.")
    seam.add_argument("--surface", required=True, choices=("mobius", "torus"))
    seam.add_argument("--decades", default="2,3,4", help="Comma-separated exponents k probing 10^-k.")
    seam.add_argument("--t", type=float, default=None, help="Fixed transverse coordinate of the probe line.")
    seam.add_argument("--R", type=float, default=3.0)
    seam.add_argument("--r", type=float, default=1.0)

    export = commands.add_parser("export", help="Write an OBJ mesh or 4D CSV point cloud.")
    export.add_argument("--surface", required=True, choices=_EMBEDDED)
    export.add_argument("--format", choices=("obj", "csv4d"), default=None)
    export.add_argument("--grid", type=int, default=32, help="Mesh cells per axis.")
    export.add_argument("--samples", type=int, default=500, help="Point-cloud sample count.")
    export.add_argument("--R", type=float, default=3.0)
    export.add_argument("--r", type=float, default=1.0)
    export.add_argument("--out", required=True, help="Destination file path.")
    return parser


def _parse_floats(text: str) -> list[float]:
    return [float(token.strip()) for token in text.split(",")]


def _parse_ints(text: str) -> list[int]:
    return [int(token.strip()) for token in text.split(",")]


def _usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            request = models.VerifyRequest(
                surface=args.surface,
                grid=args.grid,
                samples=args.samples,
                R=args.R,
                r=args.r,
                seed=args.seed,
                tol_eq=args.tol_eq,
                tol_rt=args.tol_rt,
                tol_res=args.tol_res,
            )
            response = api.run_verify(request)
            print(response.text)
            return 0 if response.passed else 1

        if args.command == "invert":
            try:
                point = _parse_floats(args.point)
            except ValueError:
                return _usage(f"could not parse --point {args.point!r} as comma-separated reals")
            request = models.InvertRequest(surface=args.surface, point=point, R=args.R, r=args.r)
            try:
                response = api.run_invert(request)
            except NotOnSurfaceError as exc:
                print(f"not on surface: {exc}", file=sys.stderr)
                return 1
            print(response.text)
            return 0

        if args.command == "seam":
            try:
                decades = _parse_ints(args.decades)
            except ValueError:
                return _usage(f"could not parse --decades {args.decades!r} as comma-separated integers")
            request = models.SeamRequest(
                surface=args.surface, decades=decades, t=args.t, R=args.R, r=args.r
            )
            response = api.run_seam(request)
            print(response.csv, end="")
            return 0 if response.passed else 1

        if args.command == "export":
            request = models.ExportRequest(
                surface=args.surface,
                format=args.format,
                grid=args.grid,
                samples=args.samples,
                R=args.R,
                r=args.r,
            )
            response = api.run_export(request)
            try:
                with open(args.out, "w", encoding="utf-8") as handle:
                    handle.write(response.content)
            except OSError as exc:
                print(f"error: could not write {args.out!r}: {exc}", file=sys.stderr)
                return 1
            print(f"wrote {args.out} ({response.items} {'vertices' if response.format == 'obj' else 'rows'})")
            return 0
    except (api.RequestError, ValidationError) as exc:
        return _usage(str(exc))
    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
