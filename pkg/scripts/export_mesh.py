"""Export both sheets (u > 0 and u < 0) of the surface as OBJ files with curvature channels.

    python3 scripts/export_mesh.py --out-dir meshes/
"""

import argparse
import math
from pathlib import Path

from rotsurf.mesh import GridSpec, build_mesh, write_csv, write_obj
from rotsurf.surfaces import tl_surface


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nu", type=int, default=80)
    ap.add_argument("--nv", type=int, default=120)
    ap.add_argument("--u-max", type=float, default=3.0)
    ap.add_argument("--out-dir", type=Path, default=Path("meshes"))
    args = ap.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)

    surface = tl_surface()
    for name, (lo, hi) in {"positive": (0.2, args.u_max), "negative": (-args.u_max, -0.2)}.items():
        mesh = build_mesh(surface, GridSpec(lo, hi, args.nu, 0.0, 2 * math.pi, args.nv), with_attrs=True)
        write_obj(mesh, args.out_dir / f"surface_{name}.obj")
        write_csv(mesh, args.out_dir / f"surface_{name}.csv")
        H = mesh.attrs["H"]
        print(f"{name}: {len(mesh.vertices)} vertices, {len(mesh.faces)} triangles, "
              f"H in [{H.min():.4f}, {H.max():.4f}]")


if __name__ == "__main__":
    main()
