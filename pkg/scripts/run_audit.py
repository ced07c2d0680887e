"""Run the formula audit on a chosen grid and print a per-formula summary.

    python3 scripts/run_audit.py --nu 80 --nv 48 --tol 1e-6 --out-dir results/
"""

import argparse
from pathlib import Path

from rotsurf.audit import AuditGrid, audit_all


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nu", type=int, default=40)
    ap.add_argument("--nv", type=int, default=24)
    ap.add_argument("--tol", type=float, default=1e-6)
    ap.add_argument("--out-dir", type=Path, default=Path("results"))
    args = ap.parse_args()

    report = audit_all(AuditGrid(nu=args.nu, nv=args.nv), args.tol)
    args.out_dir.mkdir(parents=True, exist_ok=True)
    (args.out_dir / "report.json").write_text(report.to_json())
    (args.out_dir / "report.md").write_text(report.to_markdown())

    for v in report.verdicts + report.consistency_checks:
        where = "" if v.argmax is None else f" worst at u={v.argmax[0]:+.3f}, v={v.argmax[1]:.3f}"
        rel = "n/a" if v.max_rel_err is None else f"{v.max_rel_err:.2e}"
        print(f"{v.formula_id:<20} {v.verdict:<12} rel={rel} ({v.evaluated} evaluated){where}")
    print(f"reports written to {args.out_dir}/")


if __name__ == "__main__":
    main()
