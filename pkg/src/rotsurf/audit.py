"""Grade every transcribed formula against the jet pipeline over a sampling grid."""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field

import numpy as np

from rotsurf import __version__
from rotsurf import transcribed as tx
from rotsurf.beltrami import lb3_from_frame
from rotsurf.curvature import Frame, xyz_combos
from rotsurf.errors import DomainExcluded
from rotsurf.surfaces import DEFAULT_U_EXCLUDE, tl_surface

DEFAULT_TOL = 1e-6
MIN_SAMPLES = 100
MATCH, MISMATCH, INCONCLUSIVE = "MATCH", "MISMATCH", "INCONCLUSIVE"


@dataclass(frozen=True)
class AuditGrid:
    """u sampled on each range (endpoints included), v on [v0, v1) with the endpoint excluded."""

    u_ranges: tuple = ((-3.0, -0.2), (0.2, 3.0))
    nu: int = 40
    v_range: tuple = (0.0, 2.0 * math.pi)
    nv: int = 24
    u_exclude: float = DEFAULT_U_EXCLUDE

    def __post_init__(self):
        if self.nu < 2 * len(self.u_ranges) or self.nu % len(self.u_ranges):
            raise ValueError("nu must be a positive multiple of the number of u ranges, >= 2 per range")
        if self.nv < 1:
            raise ValueError("nv must be positive")

    def axes(self):
        per = self.nu // len(self.u_ranges)
        us = np.concatenate([np.linspace(a, b, per) for a, b in self.u_ranges])
        vs = np.linspace(self.v_range[0], self.v_range[1], self.nv, endpoint=False)
        return us, vs

    def points(self):
        """Flattened (u, v) sample arrays in u-major order."""
        us, vs = self.axes()
        U, V = np.meshgrid(us, vs, indexing="ij")
        return U.ravel(), V.ravel()

    def to_json(self) -> dict:
        return {
            "u_ranges": [list(r) for r in self.u_ranges],
            "nu": self.nu,
            "v_range": list(self.v_range),
            "nv": self.nv,
            "u_exclude": self.u_exclude,
        }


@dataclass(frozen=True)
class AuditVerdict:
    formula_id: str
    paper_anchor: str
    samples: int
    evaluated: int
    skipped: int
    skip_reasons: dict
    max_abs_err: float | None
    max_rel_err: float | None
    argmax: list | None
    argmax_component: int | None
    tolerance: float
    verdict: str
    notes: str = ""


@dataclass
class AuditReport:
    engine_version: str
    grid: AuditGrid
    tolerance: float
    min_samples: int
    verdicts: list = field(default_factory=list)
    consistency_checks: list = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "engine_version": self.engine_version,
            "grid": self.grid.to_json(),
            "tolerance": self.tolerance,
            "min_samples": self.min_samples,
            "verdicts": [asdict(v) for v in self.verdicts],
            "consistency_checks": [asdict(c) for c in self.consistency_checks],
        }

    def to_json(self) -> str:
        return json.dumps(_clean(self.to_json_dict()), indent=2, allow_nan=False) + "\n"

    def to_markdown(self) -> str:
        g = self.grid
        lines = [
            "# Formula audit report",
            "",
            f"- engine version: {self.engine_version}",
            f"- grid: u in {', '.join(f'[{a:g}, {b:g}]' for a, b in g.u_ranges)} ({g.nu} points), "
            f"v in [{g.v_range[0]:g}, {g.v_range[1]:.17g}) ({g.nv} points)",
            f"- tolerance (relative, denominator max(|pipeline|, 1)): {self.tolerance:g}",
            f"- minimum evaluated samples for a verdict: {self.min_samples}",
            "",
            "## Formulas against the pipeline",
            "",
        ]
        lines += _md_table(self.verdicts, with_anchor=True)
        lines += ["", "## Internal consistency of the printed formulas", ""]
        lines += _md_table(self.consistency_checks, with_anchor=True)
        notes = [v for v in self.verdicts if v.notes]
        if notes:
            lines += ["", "## Transcription notes", ""]
            lines += [f"- `{v.formula_id}`: {v.notes}" for v in notes]
        return "\n".join(lines) + "\n"


def _fmt(x):
    return "-" if x is None else f"{x:.3e}"


def _md_table(rows, with_anchor):
    out = ["| id | anchor | evaluated | skipped | max abs err | max rel err | arg-max (u, v) | verdict |",
           "|---|---|---|---|---|---|---|---|"]
    for r in rows:
        arg = "-" if r.argmax is None else f"({r.argmax[0]:.4g}, {r.argmax[1]:.4g})"
        if r.argmax_component is not None:
            arg += f" comp {r.argmax_component}"
        anchor = r.paper_anchor.replace("|", "\\|")
        out.append(f"| {r.formula_id} | {anchor} | {r.evaluated} | {r.skipped} | "
                   f"{_fmt(r.max_abs_err)} | {_fmt(r.max_rel_err)} | {arg} | **{r.verdict}** |")
    return out


def _clean(obj):
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else None
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


class PipelineSamples:
    """Pipeline quantities over the grid, computed once and shared by every formula."""

    def __init__(self, grid: AuditGrid):
        self.grid = grid
        self.u, self.v = grid.points()
        surface = tl_surface(grid.u_exclude)
        fr = Frame(surface, self.u, self.v, strict=False)
        self.base_valid = fr.valid.copy()
        self.base_reason = fr.reason.copy()
        lb3, self.lb3_valid, self.lb3_reason = lb3_from_frame(fr)
        H = fr.mean_curvature()
        K = fr.gaussian_curvature()
        self._values = {
            "R": surface(self.u, self.v),
            "n": fr.n.value(),
            "EFG": np.stack([fr.E.value, fr.F.value, fr.G.value]),
            "L": fr.L.value, "M": fr.M.value, "N": fr.N.value,
            "detII": fr.detII.value,
            "X": fr.X.value, "Y": fr.Y.value, "Z": fr.Z.value,
            "H": H, "K": K,
            "lb3_1": lb3[0], "lb3_2": lb3[1], "lb3_3": lb3[2],
            "zero": np.zeros_like(self.u),
        }
        u4 = self.u**4
        for key, comp, bracket in (("phi_implied", 0, tx.thm_r1_bracket),
                                   ("theta_implied", 2, tx.thm_r3_braces)):
            pipe = lb3[comp]
            tiny = np.abs(pipe) <= tx.GUARD
            self._values[key] = -u4 * bracket(self.u, self.v) / np.where(tiny, 1.0, pipe)
            self._values[key + "_singular"] = tiny

    def counterpart(self, key: str):
        """(values, valid, reason) for a pipeline counterpart key."""
        vals = self._values[key]
        if key.startswith("lb3_") or key in ("phi_implied", "theta_implied"):
            valid, reason = self.lb3_valid.copy(), self.lb3_reason.copy()
            if key.endswith("_implied"):
                tiny = self._values[key + "_singular"] & valid
                reason[tiny] = "pipeline operator vanishes"
                valid &= ~tiny
            return vals, valid, reason
        if key in ("R", "zero"):
            inside = np.abs(self.u) >= self.grid.u_exclude
            reason = np.where(inside, "", DomainExcluded.reason).astype(object)
            return vals, inside, reason
        return vals, self.base_valid, self.base_reason


def _grade(fid, anchor, u, v, lhs, rhs, valid, reason, tol, min_samples, notes=""):
    """Compare lhs against rhs sample-by-sample; skipped samples carry a reason."""
    lhs = np.atleast_2d(lhs) if np.ndim(lhs) == 1 else lhs
    rhs = np.atleast_2d(rhs) if np.ndim(rhs) == 1 else rhs
    vector = lhs.shape[0] > 1
    total = u.size
    reasons: dict = {}
    for r in reason[~valid]:
        reasons[r] = reasons.get(r, 0) + 1
    ev = valid.copy()
    abs_err = np.abs(lhs - rhs)
    rel_err = abs_err / np.maximum(np.abs(rhs), 1.0)
    nonfinite = ~np.all(np.isfinite(rel_err), axis=0) & ev
    if np.any(nonfinite):
        reasons["non-finite value"] = int(nonfinite.sum())
        ev &= ~nonfinite
    n_eval = int(ev.sum())
    if n_eval == 0:
        max_abs = max_rel = None
        argmax = comp = None
    else:
        idx = np.flatnonzero(ev)
        sub_rel = rel_err[:, idx]
        k, j = np.unravel_index(int(np.argmax(sub_rel)), sub_rel.shape)
        max_rel = float(sub_rel[k, j])
        max_abs = float(np.max(abs_err[:, idx]))
        argmax = [float(u[idx[j]]), float(v[idx[j]])]
        comp = int(k) + 1 if vector else None
    if n_eval < min_samples:
        verdict = INCONCLUSIVE
    elif max_rel <= tol:
        verdict = MATCH
    else:
        verdict = MISMATCH
    return AuditVerdict(
        formula_id=fid, paper_anchor=anchor, samples=total, evaluated=n_eval,
        skipped=total - n_eval, skip_reasons=dict(sorted(reasons.items())),
        max_abs_err=max_abs, max_rel_err=max_rel, argmax=argmax, argmax_component=comp,
        tolerance=tol, verdict=verdict, notes=notes,
    )


def _merge_masks(valid, reason, bad: dict):
    valid = valid.copy()
    reason = reason.copy()
    for why, mask in bad.items():
        hit = mask & valid
        reason[hit] = why
        valid &= ~mask
    return valid, reason


def audit(formula_id: str, grid: AuditGrid | None = None, tol: float = DEFAULT_TOL,
          min_samples: int = MIN_SAMPLES, samples: PipelineSamples | None = None) -> AuditVerdict:
    if tol <= 0:
        raise ValueError("tol must be positive")
    grid = grid or AuditGrid()
    samples = samples or PipelineSamples(grid)
    f = tx.get(formula_id)
    rhs, valid, reason = samples.counterpart(f.counterpart)
    lhs, bad = f.evaluate(samples.u, samples.v)
    valid, reason = _merge_masks(valid, reason, bad)
    return _grade(f.id, f.anchor, samples.u, samples.v, lhs, rhs, valid, reason,
                  tol, min_samples, f.notes)


def consistency_checks(samples: PipelineSamples, tol: float, min_samples: int) -> list:
    u, v = samples.u, samples.v
    inside = np.abs(u) >= samples.grid.u_exclude
    base_reason = np.where(inside, "", DomainExcluded.reason).astype(object)

    def ev(fid):
        return tx.get(fid).evaluate(u, v)

    (L, bl), (M, bm), (N, bn) = ev("PROOF_L"), ev("PROOF_M"), ev("PROOF_N")
    (E, F, G), _ = ev("PROOF_EFG")
    detii, bd = ev("PROOF_DETII")
    (X, bx), (Y, by), (Z, bz) = ev("PROOF_X"), ev("PROOF_Y"), ev("PROOF_Z")
    K, bk = ev("COR4_K")
    lmn_bad = {tx.SINGULAR: bl[tx.SINGULAR] | bm[tx.SINGULAR] | bn[tx.SINGULAR]}

    checks = []
    valid, reason = _merge_masks(inside, base_reason, {tx.SINGULAR: bd[tx.SINGULAR] | lmn_bad[tx.SINGULAR]})
    checks.append(_grade("CONSIST_DETII_LMN", "PROOF_DETII == PROOF_L * PROOF_N - PROOF_M^2",
                         u, v, detii, L * N - M * M, valid, reason, tol, min_samples))
    valid, reason = _merge_masks(inside, base_reason, lmn_bad)
    combos = np.stack(xyz_combos(E, F, G, L, M, N))
    checks.append(_grade("CONSIST_XYZ_COMBOS",
                         "(PROOF_X, PROOF_Y, PROOF_Z) == X, Y, Z combinations of PROOF_EFG and PROOF_L/M/N",
                         u, v, np.stack([X, Y, Z]), combos, valid, reason, tol, min_samples))
    u4 = np.where(np.abs(u) > 0, u**4, 1.0)
    valid, reason = _merge_masks(inside, base_reason, {tx.SINGULAR: bk[tx.SINGULAR] | bd[tx.SINGULAR]})
    checks.append(_grade("CONSIST_K_DETII", "COR4_K == PROOF_DETII / u^4",
                         u, v, K, detii / u4, valid, reason, tol, min_samples))
    return sorted(checks, key=lambda c: c.formula_id)


def audit_all(grid: AuditGrid | None = None, tol: float = DEFAULT_TOL,
              min_samples: int = MIN_SAMPLES) -> AuditReport:
    if tol <= 0:
        raise ValueError("tol must be positive")
    grid = grid or AuditGrid()
    samples = PipelineSamples(grid)
    verdicts = [audit(f.id, grid, tol, min_samples, samples) for f in tx.registry()]
    return AuditReport(
        engine_version=__version__, grid=grid, tolerance=tol, min_samples=min_samples,
        verdicts=sorted(verdicts, key=lambda r: r.formula_id),
        consistency_checks=consistency_checks(samples, tol, min_samples),
    )


# -- minimality locus ---------------------------------------------------------

@dataclass(frozen=True)
class PrintedRoot:
    label: str
    value: object
    residual: float | None
    status: str


@dataclass(frozen=True)
class MinimalLocus:
    v: float
    discriminant: float
    printed_roots: list
    corrected_roots: list
    corrected_residuals: list


def minimal_locus(v: float) -> MinimalLocus:
    """Zeros in u of the mean-curvature numerator u^3 sin 2v + 2u^2 cos 2v + u^4 at fixed v."""
    v = float(v)
    s2, c2 = math.sin(2 * v), math.cos(2 * v)
    printed = [
        PrintedRoot("u1", complex(0, -0.5), tx.complex_root_residual(-1, v),
                  "complex root acknowledged; residual of the full minimality expression"),
        PrintedRoot("u2", complex(0, 0.5), tx.complex_root_residual(1, v),
                  "complex root acknowledged; residual of the full minimality expression"),
    ]
    u3, u4, rad = tx.printed_real_roots(np.float64(v))
    for label, r in (("u3", u3), ("u4", u4)):
        if rad < 0:
            printed.append(PrintedRoot(label, None, None, f"domain failure: negative radicand {float(rad):.17g}"))
        else:
            printed.append(PrintedRoot(label, float(r), abs(float(tx.h_numerator(r, v))), "ok"))

    # u^2 + u sin 2v + 2 cos 2v = 0 after dividing out u^2 (u != 0)
    disc = s2 * s2 - 8.0 * c2
    roots: list = []
    if disc >= 0:
        sq = math.sqrt(disc)
        cand = sorted({(-s2 - sq) / 2.0, (-s2 + sq) / 2.0})
        roots = [r for r in cand if abs(r) > 1e-12]
    residuals = [abs(float(tx.h_numerator(r, v))) for r in roots]
    return MinimalLocus(v, disc, printed, roots, residuals)
