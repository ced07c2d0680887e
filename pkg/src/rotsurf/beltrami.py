"""Laplace-Beltrami operators of the third and first fundamental forms.

The third-form operator is evaluated in divergence form

    -(sqrt|det I| / det II) * [ d/du P - d/dv Q ],
    P = (Z phi_u - Y phi_v) / (sqrt|det I| det II),
    Q = (Y phi_u - X phi_v) / (sqrt|det I| det II),

where P and Q are carried as jets so the outer derivatives are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from rotsurf import jets
from rotsurf.curvature import Frame
from rotsurf.jets import Jet2
from rotsurf.minkowski import LVec3
from rotsurf.surfaces import ParametricSurface


@dataclass(frozen=True)
class ScalarField:
    """A function (u, v) -> scalar that also accepts jets."""

    fn: Callable
    name: str = "phi"

    def __call__(self, u, v):
        return self.fn(u, v)

    def jet(self, u, v) -> Jet2:
        out = self.fn(jets.seed_u(u), jets.seed_v(v))
        if not isinstance(out, Jet2):
            out = jets.constant(np.broadcast_to(np.asarray(out, dtype=float), np.shape(u)))
        return out

    @classmethod
    def component(cls, surface: ParametricSurface, i: int) -> ScalarField:
        return cls(lambda u, v: surface.chart(u, v)[i], name=f"R{i + 1}")

    def __add__(self, other: ScalarField) -> ScalarField:
        return ScalarField(lambda u, v: self.fn(u, v) + other.fn(u, v), f"({self.name}+{other.name})")

    def __mul__(self, k: float) -> ScalarField:
        return ScalarField(lambda u, v: self.fn(u, v) * k, f"{k}*{self.name}")

    __rmul__ = __mul__


@dataclass(frozen=True)
class BeltramiResult:
    value: float
    detI: float
    detII: float
    X: float
    Y: float
    Z: float
    P: float
    Q: float


def _lb3_jet(fr: Frame, detII: Jet2, phi: Jet2):
    phi_u, phi_v = phi.d_u(), phi.d_v()
    denom = fr.root * detII
    P = (fr.Z * phi_u - fr.Y * phi_v) / denom
    Q = (fr.Y * phi_u - fr.X * phi_v) / denom
    value = -(fr.root.value / detII.value) * (P.d_u().value - Q.d_v().value)
    return value, P, Q


def lb3_scalar(surface: ParametricSurface, field: ScalarField, u, v) -> BeltramiResult:
    fr = Frame(surface, u, v)
    detII = fr.require_nonparabolic()
    value, P, Q = _lb3_jet(fr, detII, field.jet(fr.u, fr.v))
    return BeltramiResult(
        value=value, detI=fr.detI.value, detII=detII.value,
        X=fr.X.value, Y=fr.Y.value, Z=fr.Z.value, P=P.value, Q=Q.value,
    )


def _pack(vals):
    arr = np.stack([np.asarray(x, dtype=float) for x in vals])
    return LVec3.from_seq(arr) if arr.ndim == 1 else arr


def lb3_position(surface: ParametricSurface, u, v):
    """Third-form operator applied to each coordinate of the chart."""
    fr = Frame(surface, u, v)
    detII = fr.require_nonparabolic()
    return _pack(_lb3_jet(fr, detII, comp)[0] for comp in fr.R)


def _lb1_jet(fr: Frame, phi: Jet2):
    phi_u, phi_v = phi.d_u(), phi.d_v()
    A = (fr.G * phi_u - fr.F * phi_v) / fr.root
    B = (fr.E * phi_v - fr.F * phi_u) / fr.root
    return fr.sign / fr.root.value * (A.d_u().value + B.d_v().value)


def lb1_scalar(surface: ParametricSurface, field: ScalarField, u, v):
    fr = Frame(surface, u, v)
    return _lb1_jet(fr, field.jet(fr.u, fr.v))


def lb1_position(surface: ParametricSurface, u, v):
    """Metric Laplacian of the first fundamental form applied to the chart coordinates."""
    fr = Frame(surface, u, v)
    return _pack(_lb1_jet(fr, comp) for comp in fr.R)


def lb3_from_frame(fr: Frame):
    """Position operator on a (possibly lenient) frame: ``(values (3, ...), valid, reason)``."""
    detII = fr.require_nonparabolic()
    vals = np.stack([np.asarray(_lb3_jet(fr, detII, comp)[0]) for comp in fr.R])
    return vals, fr.valid.copy(), fr.reason.copy()


def lb3_position_grid(surface: ParametricSurface, u, v):
    """Masked grid version of :func:`lb3_position`."""
    return lb3_from_frame(Frame(surface, u, v, strict=False))


def lb3_quotients(surface: ParametricSurface, field: ScalarField, u, v):
    """Pointwise P and Q; the finite-difference oracle differentiates these."""
    r = lb3_scalar(surface, field, u, v)
    return r.P, r.Q
