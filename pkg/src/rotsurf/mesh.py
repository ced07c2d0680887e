"""Triangle meshes of a chart over a rectangular (u, v) grid, written as OBJ or CSV."""

from __future__ import annotations

import csv
from dataclasses import dataclass, field

import numpy as np

from rotsurf.curvature import evaluate_grid
from rotsurf.surfaces import DEFAULT_U_EXCLUDE, ParametricSurface

ATTR_NAMES = ("E", "F", "G", "detI", "L", "M", "N", "detII", "H", "K")


@dataclass(frozen=True)
class GridSpec:
    u_min: float
    u_max: float
    nu: int
    v_min: float
    v_max: float
    nv: int
    u_exclude: float = DEFAULT_U_EXCLUDE

    def __post_init__(self):
        if not self.u_min < self.u_max:
            raise ValueError("u_min must be smaller than u_max")
        if not self.v_min < self.v_max:
            raise ValueError("v_min must be smaller than v_max")
        if self.nu < 2 or self.nv < 2:
            raise ValueError("nu and nv must be at least 2")
        if self.u_exclude < 0:
            raise ValueError("u_exclude must be non-negative")

    def axes(self):
        return np.linspace(self.u_min, self.u_max, self.nu), np.linspace(self.v_min, self.v_max, self.nv)


@dataclass
class Mesh:
    uv: np.ndarray  # (n, 2)
    vertices: np.ndarray  # (n, 3)
    faces: np.ndarray  # (m, 3), 0-based
    attrs: dict = field(default_factory=dict)


def build_mesh(surface: ParametricSurface, grid: GridSpec, with_attrs: bool = False) -> Mesh:
    """Vertices in u-major order; excluded-band rows are dropped and no face spans them."""
    us, vs = grid.axes()
    keep_u = np.abs(us) >= grid.u_exclude
    if not np.any(keep_u):
        raise ValueError("every grid sample lies in the excluded band")
    kept = np.flatnonzero(keep_u)
    U, V = np.meshgrid(us[kept], vs, indexing="ij")
    uv = np.column_stack([U.ravel(), V.ravel()])
    verts = np.asarray(surface(uv[:, 0], uv[:, 1])).T

    nv = grid.nv
    row_of = {int(i): r for r, i in enumerate(kept)}
    faces = []
    for i in kept[:-1]:
        if int(i) + 1 not in row_of:
            continue
        r0, r1 = row_of[int(i)], row_of[int(i) + 1]
        for j in range(nv - 1):
            a, b = r0 * nv + j, r1 * nv + j
            c, d = r1 * nv + j + 1, r0 * nv + j + 1
            faces.append((a, b, c))
            faces.append((a, c, d))
    faces = np.array(faces, dtype=np.int64).reshape(-1, 3)

    attrs = {}
    if with_attrs:
        geo, valid, _ = evaluate_grid(surface, uv[:, 0], uv[:, 1])
        for name in ATTR_NAMES:
            attrs[name] = np.where(valid, getattr(geo, name), np.nan)
    return Mesh(uv, verts, faces, attrs)


def _num(x: float) -> str:
    return format(float(x), ".17g")


def write_obj(mesh: Mesh, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(f"# {len(mesh.vertices)} vertices, {len(mesh.faces)} triangles\n")
        if mesh.attrs:
            fh.write("# per-vertex attributes follow each vertex as '#a H K detII'\n")
        for k, (x, y, z) in enumerate(mesh.vertices):
            fh.write(f"v {_num(x)} {_num(y)} {_num(z)}\n")
            if mesh.attrs:
                fh.write("#a " + " ".join(_num(mesh.attrs[n][k]) for n in ("H", "K", "detII")) + "\n")
        for a, b, c in mesh.faces + 1:
            fh.write(f"f {a} {b} {c}\n")


def write_csv(mesh: Mesh, path) -> None:
    header = ["u", "v", "x", "y", "z"] + (list(ATTR_NAMES) if mesh.attrs else [])
    with open(path, "w", encoding="ascii", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for k in range(len(mesh.vertices)):
            row = [*mesh.uv[k], *mesh.vertices[k]]
            if mesh.attrs:
                row += [mesh.attrs[n][k] for n in ATTR_NAMES]
            w.writerow([_num(x) for x in row])


def read_obj(path):
    """Minimal OBJ reader (v and f records only) returning 0-based faces."""
    verts, faces = [], []
    with open(path, encoding="ascii") as fh:
        for line in fh:
            parts = line.split()
            if not parts or parts[0].startswith("#"):
                continue
            if parts[0] == "v":
                verts.append([float(p) for p in parts[1:4]])
            elif parts[0] == "f":
                faces.append([int(p.split("/")[0]) - 1 for p in parts[1:]])
    return np.array(verts), np.array(faces, dtype=np.int64)
