"""Tabulate the real zeros of the mean-curvature numerator as v sweeps a full turn.

Also reports where the printed closed-form roots fail (negative radicand) or miss.
"""

import argparse
import math

from rotsurf.audit import minimal_locus


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=36)
    args = ap.parse_args()

    print(f"{'v':>8} {'disc':>10} {'roots':>26} {'printed u3':>12} {'printed u4':>12}")
    for k in range(args.n):
        loc = minimal_locus(2 * math.pi * k / args.n)
        roots = ", ".join(f"{r:+.5f}" for r in loc.corrected_roots) or "none"
        printed = {p.label: p for p in loc.printed_roots}
        cells = []
        for lab in ("u3", "u4"):
            p = printed[lab]
            cells.append("domain" if p.value is None else f"{p.residual:.1e}")
        print(f"{loc.v:8.4f} {loc.discriminant:10.4f} {roots:>26} {cells[0]:>12} {cells[1]:>12}")


if __name__ == "__main__":
    main()
