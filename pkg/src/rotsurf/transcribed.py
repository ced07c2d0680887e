"""Closed-form expressions for the (T,L)-type surface, transcribed as printed.

Nothing in this module is corrected.  Where the printed text is ambiguous
(missing operator, unbalanced bracket) the delimiter-balancing reading is used
and the entry's ``notes`` says so.  Every evaluator is vectorised over numpy
arrays and returns ``(value, bad)`` where ``bad`` maps a skip reason to a mask
of samples at which the expression is undefined.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from rotsurf.errors import SingularDenominator, SqrtDomain

GUARD = 1e-12
SINGULAR = "singular denominator"
NEG_RADICAND = "negative radicand"


def _sc(v, k):
    return np.sin(k * v), np.cos(k * v)


def _etap(u):
    return np.sqrt(4.0 * u**2 + 1.0)


def _root_detI(u):
    # sqrt|det I| with det I = -u^4
    return np.sqrt(np.abs(-(u**4)))


def _near_zero(x):
    return np.abs(x) <= GUARD


# -- surface, Gauss map, proof quantities ------------------------------------

def eq2_surface(u, v):
    s, c = np.sin(v), np.cos(v)
    val = np.stack([
        u**2 * c - u * s,
        u**2 * s + u * c,
        0.5 * u * np.sqrt(4 * u**2 + 1) + 0.25 * np.arcsinh(2 * u),
    ])
    return val, {}


def eq3_gauss(u, v):
    s, c = np.sin(v), np.cos(v)
    ep = _etap(u)
    root = _root_detI(u)
    bad = _near_zero(root)
    root = np.where(bad, 1.0, root)
    val = np.stack([
        -u * (s + u * c) * ep,
        -u * (c + u * s) * ep,
        -2 * u**3 + u,
    ]) / root
    return val, {SINGULAR: bad}


def proof_efg(u, v):
    u, v = np.broadcast_arrays(u, v)
    return np.stack([np.zeros_like(u), -u**2, u**4 + u**2]), {}


def _over_root(num, u):
    root = _root_detI(u)
    bad = _near_zero(root)
    return num / np.where(bad, 1.0, root) * _etap(u), {SINGULAR: bad}


def proof_l(u, v):
    s2, _ = _sc(v, 2)
    return _over_root(-2 * u * s2 - 2 * u**2, u)


def proof_m(u, v):
    s2, c2 = _sc(v, 2)
    return _over_root(u * s2 - 2 * u**2 * c2 + u**2, u)


def proof_n(u, v):
    s2, c2 = _sc(v, 2)
    return _over_root(u * s2 + u**2 * c2 + u**4, u)


def _detii_bracket(u, v):
    s2, c2 = _sc(v, 2)
    s4, c4 = _sc(v, 4)
    return ((-2 * u**3 - 4 * u) * s2 + 2 * u**2 * c2 + u * s4
            + (-2 * u**2 + 1.5) * c4 - 2 * u**4 - 3 * u**2 - 1.5)


def proof_detii(u, v):
    u2 = u**2
    bad = _near_zero(u2)
    return _etap(u)**2 / np.where(bad, 1.0, u2) * _detii_bracket(u, v), {SINGULAR: bad}


def proof_x(u, v):
    s2, c2 = _sc(v, 2)
    s4, c4 = _sc(v, 4)
    br = 4 * u**2 * s2 + 4 * u * c2 + 2 * s4 - u * c4 + 2 * u**3 + u
    return 2 * u * _etap(u)**2 * br, {}


def proof_y(u, v):
    s2, c2 = _sc(v, 2)
    s4, c4 = _sc(v, 4)
    br = (-(12 * u**3 + 8 * u) * s2 + (8 * u**4 - 4 * u**2) * c2
          + (4 * u**3 - 2 * u) * s4 + (6 * u**2 + 3) * c4 - 8 * u**4 - 3)
    return 0.5 * _etap(u)**2 * br, {}


def proof_z(u, v):
    s2, c2 = _sc(v, 2)
    s4, c4 = _sc(v, 4)
    br = (-(8 * u**3 + 8 * u) * s2 + (16 * u**4 + 4 * u**2) * c2
          + (4 * u**3 + 6 * u) * s4 + (-4 * u**4 + u**2 + 3) * c4
          - 10 * u**4 - 3 * u**2 - 3)
    return -0.5 * _etap(u)**2 * br, {}


# -- mean and Gaussian curvature -------------------------------------------------

def h_numerator(u, v):
    """u^3 sin 2v + 2 u^2 cos 2v + u^4, the factor whose zeros give minimality."""
    s2, c2 = _sc(v, 2)
    return u**3 * s2 + 2 * u**2 * c2 + u**4


def cor4_h(u, v):
    u4 = u**4
    bad = _near_zero(u4)
    return -_etap(u) / np.where(bad, 1.0, u4) * h_numerator(u, v), {SINGULAR: bad}


def cor4_k(u, v):
    u6 = u**6
    bad = _near_zero(u6)
    return _etap(u)**2 / np.where(bad, 1.0, u6) * _detii_bracket(u, v), {SINGULAR: bad}


# -- third Laplace-Beltrami of the position vector -------------------------------

def phi(u, v):
    s2, c2 = _sc(v, 2)
    s4, c4 = _sc(v, 4)
    s6, c6 = _sc(v, 6)
    s8, c8 = _sc(v, 8)
    first = (u * s4 - (2 * u**3 + 4 * u) * s2 + (-4 * u**2 + 3) * c2**2
             + 2 * u**2 * c2 - 2 * u**4 - u**2 - 3)
    second = ((64 * u**7 + 192 * u**5 + 176 * u**3 + 144 * u) * s2
              + (64 * u**8 - 144 * u**6 - 56 * u**2) * c2
              - (64 * u**5 + 112 * u**3 + 24 * u) * s4
              + (48 * u**6 - 88 * u**2 - 36) * c4
              + (32 * u**5 - 56 * u**3 - 48 * u) * s6
              + (-16 * u**4 + 56 * u**2) * c6
              + (-16 * u**3 + 12 * u) * s8
              + (16 * u**4 - 28 * u**2 + 9) * c8
              + 32 * u**8 + 112 * u**6 + 216 * u**4 + 116 * u**2 + 27)
    return _etap(u)**2 * first * second, {}


def theta(u, v):
    s2, c2 = _sc(v, 2)
    s4, c4 = _sc(v, 4)
    s6, c6 = _sc(v, 6)
    s8, c8 = _sc(v, 8)
    s10, c10 = _sc(v, 10)
    s12, c12 = _sc(v, 12)
    br = (3 * 2**-5 * u * (32 * u**10 + 136 * u**8 + 312 * u**6 - 424 * u**4 - 249 * u**2 - 90) * s2
          + 2**-5 * u**2 * (32 * u**8 + 152 * u**6 + 256 * u**4 + 132 * u**2 + 33) * c2
          - 3 * 2**-6 * u * (192 * u**8 + 672 * u**6 + 896 * u**4 + 444 * u**2 + 45) * s4
          + 3 * 2**-4 * (8 * u**10 + 8 * u**8 - 12 * u**6 - 81 * u**4 - 60) * c4
          + 2**-6 * u * (176 * u**8 + 528 * u**6 + 300 * u**4 - 203 * u**2 - 270) * s6
          - 2**-6 * u**2 * (48 * u**6 - 272 * u**4 - 648 * u**2 - 297) * c6
          - 3 * 2**-5 * u * (28 * u**6 + 20 * u**4 - 46 * u**2 - 9) * s8
          + 3 * 2**-7 * (32 * u**8 - 120 * u**6 - 204 * u**4 + 66 * u**2 + 27) * c8
          + 3 * 2**-6 * u * (16 * u**6 + 20 * u**4 - 59 * u**2 + 18) * s10
          + 9 * 2**-6 * u**2 * (16 * u**2 + 11) * c10
          - 2**-6 * u * (48 * u**4 - 76 * u**2 + 27) * s12
          + 2**-8 * (64 * u**6 - 192 * u**4 + 144 * u**2 - 27) * c12
          + 2**-7 * (128 * u**12 + 768 * u**10 + 2496 * u**8 + 3576 * u**6
                     + 2652 * u**4 + 1170 * u**2 + 135))
    return _etap(u)**2 * br, {}


def thm_r1_bracket(u, v):
    s1, c1 = _sc(v, 1)
    s3, c3 = _sc(v, 3)
    s5, c5 = _sc(v, 5)
    s7, c7 = _sc(v, 7)
    s9, c9 = _sc(v, 9)
    return ((224 * u**9 + 760 * u**7 + 468 * u**5 + 4 * u**3 + 6 * u) * s1
            + (64 * u**10 + 80 * u**8 + 100 * u**6 - 94 * u**4 + 188 * u**2) * c1
            + (-96 * u**9 - 696 * u**7 - 220 * u**5 + 148 * u**3 + 120 * u) * s3
            + (160 * u**8 - 572 * u**6 - 710 * u**4 + 160 * u**2 - 12) * c3
            + (344 * u**7 - 188 * u**5 - 556 * u**3 + 48 * u) * s5
            + (16 * u**8 - 452 * u**6 - 214 * u**4 - 432 * u**2 + 12) * c5
            + (-56 * u**7 + 48 * u**5 - 4 * u**3 - 75 * u) * s7
            + (-44 * u**6 + 64 * u**4 + 90 * u**2 + 6) * c7
            + (12 * u**5 - 8 * u**3 - 9 * u) * s9
            + (-16 * u**6 + 18 * u**4 - 6 * u**2 - 6) * c9)


def thm_r2_bracket(u, v):
    s1, c1 = _sc(v, 1)
    s3, c3 = _sc(v, 3)
    s5, c5 = _sc(v, 5)
    s7, c7 = _sc(v, 7)
    s9, c9 = _sc(v, 9)
    return ((64 * u**10 - 272 * u**8 - 1540 * u**6 - 182 * u**4 - 264 * u**2) * s1
            + (160 * u**9 - 8 * u**7 - 876 * u**5 - 332 * u**3 - 6 * u) * c1
            + (-128 * u**8 + 692 * u**6 - 318 * u**4 + 692 * u**2 + 12) * s3
            + (96 * u**9 - 232 * u**7 + 1148 * u**5 - 164 * u**3 + 120 * u) * c3
            + (16 * u**8 - 564 * u**6 - 338 * u**4 + 60 * u**2 + 12) * s5
            + (120 * u**7 - 572 * u**5 + 196 * u**3 - 48 * u) * c5
            + (148 * u**6 - 148 * u**4 - 46 * u**2 - 6) * s7
            + (56 * u**7 + 168 * u**5 - 28 * u**3 - 75 * u) * c7
            + (-16 * u**6 + 18 * u**4 - 6 * u**2 - 6) * s9
            + (12 * u**5 + 8 * u**3 + 9 * u) * c9)


def thm_r3_braces(u, v):
    s2, c2 = _sc(v, 2)
    s4, c4 = _sc(v, 4)
    s6, c6 = _sc(v, 6)
    s8, c8 = _sc(v, 8)
    ep = _etap(u)
    quad = (2**-4 * u * (32 * u**6 + 83 * u**4 + 65 * u**2 + 36) * s2
            - 2**-4 * u**2 * (32 * u**6 + 100 * u**4 + 51 * u**2 + 22) * c2
            - 2**-4 * u * (24 * u**6 + 78 * u**4 + 43 * u**2 + 12) * s4
            + 2**-4 * (38 * u**6 - 32 * u**4 - 25 * u**2 + 8 * u**8 - 9) * c4
            + 2**-4 * u * (4 * u**6 + 27 * u**4 + 5 * u**2 - 12) * s6
            - 2**-4 * u**2 * (16 * u**4 - 27 * u**2 - 22) * c6
            - 2**-5 * u * (12 * u**4 + 5 * u**2 - 12) * s8
            + 2**-6 * (16 * u**6 - 24 * u**4 - 21 * u**2 + 9) * c8
            + 2**-6 * (80 * u**8 + 256 * u**6 + 224 * u**4 + 121 * u**2 + 27))
    lin = (2**-4 * u**2 * (32 * u**6 - 24 * u**4 + 109 * u**2 - 87) * s2
           + 2**-2 * u**3 * (4 * u**4 - 3 * u**2 + 24) * c2
           + 2**-4 * (104 * u**6 - 58 * u**4 + 93 * u**2 - 6) * s4
           - 2**-3 * u * (16 * u**6 - 50 * u**4 + 14 * u**2 - 9) * c4
           - 2**-4 * u**2 * (20 * u**4 - 69 * u**2 + 19) * s6
           - 2**-2 * u**3 * (19 * u**2 - 8) * c6
           - 2**-5 * (20 * u**4 - 31 * u**2 - 6) * s8
           + 2**-5 * u * (16 * u**4 - 32 * u**2 + 15) * c8
           + 2**-5 * u * (64 * u**6 + 112 * u**4 - 8 * u**2 - 51))
    return quad * ep**2 + lin * ep


def _delta3_component(prefactor, bracket, denom_fn, u, v):
    den, _ = denom_fn(u, v)
    bad = _near_zero(den)
    return -prefactor * u**4 / np.where(bad, 1.0, den) * bracket(u, v), {SINGULAR: bad}


def thm_delta3_r1(u, v):
    return _delta3_component(1.0, thm_r1_bracket, phi, u, v)


def thm_delta3_r2(u, v):
    return _delta3_component(2.0, thm_r2_bracket, phi, u, v)


def thm_delta3_r3(u, v):
    return _delta3_component(1.0, thm_r3_braces, theta, u, v)


# -- minimality roots ---------------------------------------------------------

def printed_real_roots(v):
    """The printed u_{3,4} = -+ sqrt(2 cos 2v + 2^-2 sin 2v) - 2^-1 sin 2v; NaN where the radicand is negative."""
    s2, c2 = _sc(v, 2)
    rad = 2 * c2 + 0.25 * s2
    r = np.sqrt(np.where(rad >= 0, rad, np.nan))
    return -r - 0.5 * s2, r - 0.5 * s2, rad


def min_roots(u, v):
    """H-numerator at the printed root u_3 (for u < 0 samples) or u_4 (u >= 0 samples)."""
    u3, u4, rad = printed_real_roots(v)
    root = np.where(u < 0, u3, u4)
    neg = rad < 0
    val = h_numerator(np.where(neg, 0.0, root), v)
    return val, {NEG_RADICAND: neg}


# -- registry -----------------------------------------------------------------

@dataclass(frozen=True)
class TranscribedFormula:
    id: str
    anchor: str
    arity: int
    evaluator: Callable
    counterpart: str
    notes: str = ""
    labels: tuple = field(default=())

    def evaluate(self, u, v):
        """Masked evaluation: ``(value with shape (arity, ...) or (...), bad-reason masks)``."""
        u, v = np.broadcast_arrays(np.asarray(u, dtype=float), np.asarray(v, dtype=float))
        return self.evaluator(u, v)


_REGISTRY = (
    TranscribedFormula(
        "EQ2_SURFACE", "u^2 cos(v) - u sin(v); u^2 sin(v) + u cos(v); 1/2 u sqrt(4u^2+1) + 1/4 sinh^-1(2u)",
        3, eq2_surface, "R"),
    TranscribedFormula(
        "EQ3_GAUSS", "1/sqrt|det I| (-u(sin(v)+u cos(v)) eta', -u(cos(v)+u sin(v)) eta', -2u^3+u)",
        3, eq3_gauss, "n",
        notes="transcribed at face value, including the third component -2u^3+u"),
    TranscribedFormula("PROOF_EFG", "E=0, F=-u^2, G=u^4+u^2", 3, proof_efg, "EFG",
                       labels=("E", "F", "G")),
    TranscribedFormula("PROOF_L", "L = (-2u sin(2v) - 2u^2)/sqrt|det I| eta'", 1, proof_l, "L"),
    TranscribedFormula("PROOF_M", "M = (u sin(2v) - 2u^2 cos(2v) + u^2)/sqrt|det I| eta'", 1, proof_m, "M"),
    TranscribedFormula("PROOF_N", "N = (u sin(2v) + u^2 cos(2v) + u^4)/sqrt|det I| eta'", 1, proof_n, "N"),
    TranscribedFormula(
        "PROOF_DETII", "det II = eta'^2/u^2 [(-2u^3-4u) sin(2v) + 2u^2 cos(2v) + u sin(4v) + ...]",
        1, proof_detii, "detII"),
    TranscribedFormula(
        "PROOF_X", "X = 2u eta'^2 [4u^2 sin(2v) + 4u cos(2v) + 2 sin(4v) - u cos(4v) + 2u^3 + u]",
        1, proof_x, "X"),
    TranscribedFormula(
        "PROOF_Y", "Y = 2^-1 eta'^2 [-(12u^3+8u) sin(2v) + (8u^4-4u^2) cos(2v) (4u^3-2u) sin(4v) + ...]",
        1, proof_y, "Y",
        notes="no operator is printed between the cos(2v) and (4u^3-2u) sin(4v) terms; read as '+'"),
    TranscribedFormula(
        "PROOF_Z", "Z = -2^-1 eta'^2 [-(8u^3+8u) sin 2v + (16u^4+4u^2) cos 2v + ...]",
        1, proof_z, "Z"),
    TranscribedFormula(
        "THM_DELTA3_R1", "Delta^III R_1 = -u^4/Phi [(224u^9+760u^7+468u^5+4u^3+6u) sin(v) + ...]",
        1, thm_delta3_r1, "lb3_1"),
    TranscribedFormula(
        "THM_DELTA3_R2", "Delta^III R_2 = -2u^4/Phi [(64u^10-272u^8-1540u^6-182u^4-264u^2) sin(v) + ...]",
        1, thm_delta3_r2, "lb3_2",
        notes="closing bracket after the final (12u^5+8u^3+9u) cos(9v) term is missing; balanced reading"),
    TranscribedFormula(
        "THM_DELTA3_R3", "Delta^III R_3 = -u^4/Theta {[2^-4 u(32u^6+83u^4+65u^2+36) sin(2v) ...] eta'^2 + [...] eta'}",
        1, thm_delta3_r3, "lb3_3"),
    TranscribedFormula(
        "PHI", "Phi = eta'^2 [u sin(4v) - (2u^3+4u) sin(2v) + ...] [(64u^7+192u^5+176u^3+144u) sin(2v) + ...]",
        1, phi, "phi_implied",
        notes="graded against the denominator implied by the pipeline Delta^III R_1 and the printed numerator"),
    TranscribedFormula(
        "THETA", "Theta = eta'^2 [3 2^-5 u(32u^10+136u^8+312u^6-424u^4-249u^2-90) sin(2v) + ...]",
        1, theta, "theta_implied",
        notes="graded against the denominator implied by the pipeline Delta^III R_3 and the printed numerator; "
              "the cos(4v) polynomial has no u^2 term as printed"),
    TranscribedFormula(
        "COR4_H", "H = -eta'/u^4 (u^3 sin(2v) + 2u^2 cos(2v) + u^4)", 1, cor4_h, "H"),
    TranscribedFormula(
        "COR4_K", "K = eta'^2/u^6 [-(2u^3+4u) sin(2v) + 2u^2 cos(2v) + u sin(4v) + ...]", 1, cor4_k, "K"),
    TranscribedFormula(
        "MIN_ROOTS", "u_{1,2} = -+2^-1 i, u_{3,4} = -+sqrt(2cos(2v) + 2^-2 sin(2v)) - 2^-1 sin(2v)",
        1, min_roots, "zero",
        notes="graded by the H-numerator residual at u_3 (u<0 samples) or u_4 (u>0 samples); "
              "samples with a negative radicand are skipped"),
)

_BY_ID = {f.id: f for f in _REGISTRY}


def registry() -> list[TranscribedFormula]:
    return list(_REGISTRY)


def get(formula_id: str) -> TranscribedFormula:
    try:
        return _BY_ID[formula_id]
    except KeyError:
        raise KeyError(f"unknown formula id {formula_id!r}") from None


def eval_transcribed(formula_id: str, u, v):
    """Literal value of a printed formula at (u, v); raises where it is undefined."""
    f = get(formula_id)
    val, bad = f.evaluate(u, v)
    for reason, mask in bad.items():
        if np.any(mask):
            exc = SqrtDomain if reason == NEG_RADICAND else SingularDenominator
            raise exc(f"{formula_id}: {reason} at the requested point")
    if f.arity == 3 and np.ndim(val) == 1:
        from rotsurf.minkowski import LVec3
        return LVec3.from_seq(val)
    return float(val) if np.ndim(val) == 0 else val


def complex_root_residual(sign: int, v: float) -> float:
    """|-sqrt(4u^2+1)/u^4 (u^3 sin 2v + 2u^2 cos 2v + u^4)| at the complex root u = sign * i/2."""
    z = sign * 0.5j
    num = z**3 * math.sin(2 * v) + 2 * z**2 * math.cos(2 * v) + z**4
    return abs(-cmath.sqrt(4 * z * z + 1) / z**4 * num)
