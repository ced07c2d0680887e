"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 domain/degeneracy failure,
3 ``audit --strict`` found a MISMATCH.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys

from rotsurf import __version__
from rotsurf.audit import DEFAULT_TOL, MISMATCH, AuditGrid, audit_all, minimal_locus
from rotsurf.beltrami import lb1_position, lb3_position
from rotsurf.curvature import point_geometry
from rotsurf.errors import GeometryError
from rotsurf.mesh import GridSpec, build_mesh, write_csv, write_obj
from rotsurf.surfaces import DEFAULT_U_EXCLUDE, tl_surface

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_STRICT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _default_tol() -> float:
    env = os.environ.get("ROTSURF_TOL")
    if env is None:
        return DEFAULT_TOL
    try:
        return float(env)
    except ValueError:
        raise UsageError(f"ROTSURF_TOL is not a number: {env!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="rotsurf", description="Geometry engine and formula audit for the (T,L)-type rotational surface.")
    p.add_argument("--version", action="version", version=f"rotsurf {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    m = sub.add_parser("mesh", help="export the surface as an OBJ or CSV mesh")
    m.add_argument("--u-min", type=float, required=True)
    m.add_argument("--u-max", type=float, required=True)
    m.add_argument("--nu", type=int, required=True)
    m.add_argument("--v-min", type=float, required=True)
    m.add_argument("--v-max", type=float, required=True)
    m.add_argument("--nv", type=int, required=True)
    m.add_argument("--u-exclude", type=float, default=DEFAULT_U_EXCLUDE)
    m.add_argument("--format", choices=("obj", "csv"), required=True)
    m.add_argument("--out", required=True)
    m.add_argument("--attrs", action="store_true", help="add per-vertex geometry channels")

    i = sub.add_parser("invariants", help="pointwise geometry at (u, v)")
    i.add_argument("--u", type=float, required=True)
    i.add_argument("--v", type=float, required=True)
    i.add_argument("--u-exclude", type=float, default=DEFAULT_U_EXCLUDE)
    i.add_argument("--lorentz-sign", type=int, choices=(1, -1), default=1)
    i.add_argument("--json", action="store_true")

    a = sub.add_parser("audit", help="grade the transcribed formulas against the pipeline")
    a.add_argument("--grid", default="40x24", help="NUxNV; NU is split evenly between u<0 and u>0")
    a.add_argument("--u-exclude", type=float, default=DEFAULT_U_EXCLUDE)
    a.add_argument("--tol", type=float, default=None)
    a.add_argument("--out", default="report.json")
    a.add_argument("--markdown", default="report.md")
    a.add_argument("--strict", action="store_true")

    ml = sub.add_parser("minimal-locus", help="zeros of the mean-curvature numerator at fixed v")
    g = ml.add_mutually_exclusive_group(required=True)
    g.add_argument("--v", type=float)
    g.add_argument("--sweep", type=int)
    return p


def _cmd_mesh(args) -> int:
    try:
        grid = GridSpec(args.u_min, args.u_max, args.nu, args.v_min, args.v_max, args.nv, args.u_exclude)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        mesh = build_mesh(tl_surface(args.u_exclude), grid, with_attrs=args.attrs)
    except ValueError as exc:
        print(f"rotsurf mesh: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    (write_obj if args.format == "obj" else write_csv)(mesh, args.out)
    print(f"wrote {len(mesh.vertices)} vertices, {len(mesh.faces)} triangles to {args.out}")
    return EXIT_OK


def _num(x: float) -> str:
    return format(float(x), ".17g")


def _cmd_invariants(args) -> int:
    surface = tl_surface(args.u_exclude)
    try:
        geo = point_geometry(surface, args.u, args.v, lorentz_sign=args.lorentz_sign)
        lb3 = lb3_position(surface, args.u, args.v)
        lb1 = lb1_position(surface, args.u, args.v)
    except GeometryError as exc:
        print(f"rotsurf invariants: {exc.reason}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    record = geo.as_dict()
    for k in range(3):
        record[f"lb3_{k + 1}"] = lb3[k]
    for k in range(3):
        record[f"lb1_{k + 1}"] = lb1[k]
    record["character"] = geo.character.value
    if args.json:
        print(json.dumps({k: (float(v) if not isinstance(v, str) else v) for k, v in record.items()}))
    else:
        width = max(map(len, record))
        for k, v in record.items():
            print(f"{k:<{width}}  {v if isinstance(v, str) else _num(v)}")
    return EXIT_OK


def _parse_grid(text: str):
    m = re.fullmatch(r"(\d+)x(\d+)", text.strip())
    if not m:
        raise UsageError(f"--grid must look like NUxNV, got {text!r}")
    return int(m.group(1)), int(m.group(2))


def _cmd_audit(args) -> int:
    nu, nv = _parse_grid(args.grid)
    tol = args.tol if args.tol is not None else _default_tol()
    if not tol > 0:
        raise UsageError("--tol must be positive")
    try:
        grid = AuditGrid(nu=nu, nv=nv, u_exclude=args.u_exclude)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = audit_all(grid, tol)
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(report.to_json())
    with open(args.markdown, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(report.to_markdown())
    for v in report.verdicts + report.consistency_checks:
        rel = "-" if v.max_rel_err is None else f"{v.max_rel_err:.3e}"
        print(f"{v.formula_id:<20} {v.verdict:<12} max_rel_err={rel}")
    if args.strict and any(v.verdict == MISMATCH for v in report.verdicts + report.consistency_checks):
        return EXIT_STRICT
    return EXIT_OK


def _print_locus(loc) -> None:
    print(f"v = {_num(loc.v)}")
    print(f"  discriminant sin^2(2v) - 8 cos(2v) = {_num(loc.discriminant)}")
    if loc.corrected_roots:
        for r, res in zip(loc.corrected_roots, loc.corrected_residuals):
            print(f"  root u = {_num(r)}  H-numerator residual = {res:.3e}")
    else:
        print("  real roots: none")
    for pr in loc.printed_roots:
        val = "-" if pr.value is None else (str(pr.value) if isinstance(pr.value, complex) else _num(pr.value))
        res = "-" if pr.residual is None else f"{pr.residual:.3e}"
        print(f"  printed {pr.label} = {val}  residual = {res}  [{pr.status}]")


def _cmd_minimal_locus(args) -> int:
    if args.sweep is not None:
        if args.sweep < 1:
            raise UsageError("--sweep must be positive")
        vs = [2.0 * math.pi * k / args.sweep for k in range(args.sweep)]
    else:
        if not math.isfinite(args.v):
            raise UsageError("--v must be finite")
        vs = [args.v]
    for v in vs:
        _print_locus(minimal_locus(v))
    return EXIT_OK


_COMMANDS = {
    "mesh": _cmd_mesh,
    "invariants": _cmd_invariants,
    "audit": _cmd_audit,
    "minimal-locus": _cmd_minimal_locus,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
