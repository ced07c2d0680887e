import math

import numpy as np
import pytest

from rotsurf import transcribed as tx
from rotsurf.audit import (
    INCONCLUSIVE, MATCH, MISMATCH, AuditGrid, PipelineSamples, audit, audit_all, minimal_locus,
)


@pytest.fixture(scope="module")
def samples():
    return PipelineSamples(AuditGrid())


@pytest.fixture(scope="module")
def report():
    return audit_all()


def test_grid_layout():
    g = AuditGrid()
    us, vs = g.axes()
    assert len(us) == 40 and len(vs) == 24
    assert us.min() == -3.0 and us.max() == 3.0 and np.min(np.abs(us)) == pytest.approx(0.2)
    assert vs[0] == 0.0 and vs[-1] < 2 * math.pi
    with pytest.raises(ValueError):
        AuditGrid(nu=3)


def test_efg_and_surface_match(samples):
    efg = audit("PROOF_EFG", samples=samples)
    assert efg.verdict == MATCH and efg.max_rel_err <= 1e-10
    eq2 = audit("EQ2_SURFACE", samples=samples)
    assert eq2.verdict == MATCH and eq2.max_rel_err <= 1e-13
    assert efg.evaluated == efg.samples == 960


def test_gauss_map_mismatch(samples):
    r = audit("EQ3_GAUSS", samples=samples)
    assert r.verdict == MISMATCH
    assert r.argmax is not None and r.max_abs_err > 0
    # the third component is off everywhere (u vs -u), but the first component,
    # which lacks the rotation structure, carries the larger worst-case error
    assert r.argmax_component == 1
    lhs, _ = tx.get("EQ3_GAUSS").evaluate(samples.u, samples.v)
    rhs, valid, _ = samples.counterpart("n")
    err = np.abs(lhs - rhs) / np.maximum(np.abs(rhs), 1.0)
    assert np.all(err[2][valid] > 1e-6)
    assert np.max(err[1][valid]) <= 1e-12
    from rotsurf.curvature import gauss_map
    from rotsurf.surfaces import tl_surface
    assert tx.eval_transcribed("EQ3_GAUSS", 1.0, 0.0)[2] == pytest.approx(-1.0)
    assert gauss_map(tl_surface(), 1.0, 0.0)[2] == pytest.approx(-3.0)


def test_report_shape(report):
    assert [v.formula_id for v in report.verdicts] == sorted(f.id for f in tx.registry())
    assert len(report.verdicts) == 18 and len(report.consistency_checks) == 3
    for v in report.verdicts:
        assert v.samples == v.evaluated + v.skipped
        if v.verdict == MISMATCH:
            assert v.argmax is not None and v.max_rel_err is not None


def test_consistency_checks_match(report):
    for c in report.consistency_checks:
        assert c.verdict == MATCH and c.max_rel_err <= 1e-8


def test_determinism(report):
    assert audit_all().to_json() == report.to_json()
    assert audit_all().to_markdown() == report.to_markdown()


def test_json_schema(report):
    import json
    d = json.loads(report.to_json())
    assert {"engine_version", "grid", "tolerance", "verdicts", "consistency_checks"} <= set(d)
    assert {"u_ranges", "nu", "v_range", "nv"} <= set(d["grid"])
    keys = {"formula_id", "paper_anchor", "samples", "skipped", "max_abs_err", "max_rel_err",
            "argmax", "tolerance", "verdict"}
    assert all(keys <= set(v) for v in d["verdicts"])


def test_monotone_in_tolerance(samples):
    for f in tx.registry():
        prev = None
        for tol in (1e-12, 1e-6, 1e-2, 1e3, 1e12):
            v = audit(f.id, tol=tol, samples=samples).verdict
            if prev == MATCH:
                assert v == MATCH
            prev = v


def test_small_grid_is_inconclusive():
    r = audit("PROOF_EFG", grid=AuditGrid(nu=4, nv=4))
    assert r.verdict == INCONCLUSIVE and r.evaluated == 16


def test_skips_are_recorded(samples):
    r = audit("MIN_ROOTS", samples=samples)
    assert r.skipped > 0 and sum(r.skip_reasons.values()) == r.skipped


def test_bad_tolerance():
    with pytest.raises(ValueError):
        audit("PROOF_EFG", tol=0.0)


def test_minimal_locus_quarter_turn():
    loc = minimal_locus(math.pi / 2)
    assert loc.corrected_roots == pytest.approx([-math.sqrt(2), math.sqrt(2)], abs=1e-12)
    assert max(loc.corrected_residuals) <= 1e-12
    u3 = next(p for p in loc.printed_roots if p.label == "u3")
    assert u3.value is None and "negative radicand" in u3.status


def test_minimal_locus_no_real_roots():
    loc = minimal_locus(0.0)
    assert loc.corrected_roots == [] and loc.discriminant == pytest.approx(-8.0)


@pytest.mark.parametrize("v", np.linspace(0, 2 * math.pi, 13))
def test_minimal_locus_roots_zero_the_numerator(v):
    loc = minimal_locus(v)
    for r, res in zip(loc.corrected_roots, loc.corrected_residuals):
        assert res <= 1e-12 * max(1.0, r**4)
