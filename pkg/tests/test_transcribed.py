import math

import numpy as np
import pytest

from rotsurf import transcribed as tx
from rotsurf.errors import SingularDenominator

S5 = math.sqrt(5.0)

IDS = {
    "EQ2_SURFACE", "EQ3_GAUSS", "PROOF_EFG", "PROOF_L", "PROOF_M", "PROOF_N", "PROOF_DETII",
    "PROOF_X", "PROOF_Y", "PROOF_Z", "THM_DELTA3_R1", "THM_DELTA3_R2", "THM_DELTA3_R3",
    "PHI", "THETA", "COR4_H", "COR4_K", "MIN_ROOTS",
}

GOLDEN = [
    ("PROOF_X", 60.0),
    ("PROOF_Y", 5.0),
    ("PROOF_Z", -10.0),
    ("PROOF_DETII", -25.0),
    ("COR4_H", -3 * S5),
    ("COR4_K", -25.0),
    ("PROOF_L", -2 * S5),
    ("PROOF_M", -S5),
    ("PROOF_N", 2 * S5),
]


def test_registry_contents():
    reg = tx.registry()
    assert {f.id for f in reg} == IDS and len(reg) == 18
    assert all(f.anchor.strip() for f in reg)
    assert tx.get("EQ2_SURFACE").counterpart == "R"


def test_unknown_id():
    with pytest.raises(KeyError):
        tx.get("NOPE")


@pytest.mark.parametrize("fid,expected", GOLDEN)
def test_golden_values(fid, expected):
    assert tx.eval_transcribed(fid, 1.0, 0.0) == pytest.approx(expected, abs=1e-9)


def test_gauss_map_transcription():
    got = tx.eval_transcribed("EQ3_GAUSS", 1.0, 0.0).to_array()
    assert got == pytest.approx([-S5, -S5, -1.0], abs=1e-9)


def test_surface_transcription():
    got = tx.eval_transcribed("EQ2_SURFACE", 1.0, 0.0).to_array()
    assert got == pytest.approx([1.0, 1.0, 1.4789428575], abs=1e-9)


def test_singular_at_origin():
    with pytest.raises(SingularDenominator):
        tx.eval_transcribed("PROOF_L", 0.0, 0.3)


def test_vectorised_evaluation_matches_scalar():
    u = np.array([0.5, 1.0, -2.0])
    v = np.array([0.1, 0.0, 2.0])
    vals, bad = tx.get("PROOF_X").evaluate(u, v)
    assert not any(m.any() for m in bad.values())
    assert vals == pytest.approx([tx.eval_transcribed("PROOF_X", a, b) for a, b in zip(u, v)])


def test_complex_roots_zero_residual():
    for v in (0.0, 0.7, 2.0):
        assert tx.complex_root_residual(1, v) == pytest.approx(0.0, abs=1e-12)
        assert tx.complex_root_residual(-1, v) == pytest.approx(0.0, abs=1e-12)


def test_notes_record_readings():
    notes = {f.id: f.notes for f in tx.registry()}
    for fid in ("PROOF_Y", "THM_DELTA3_R2", "EQ3_GAUSS", "THETA"):
        assert notes[fid]
