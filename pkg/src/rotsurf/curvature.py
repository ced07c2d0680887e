"""Pointwise differential geometry of a chart, computed from its degree-3 jet.

Nothing here uses a closed form for any particular surface: every quantity is
built from the jet of ``surface.chart`` with the Lorentzian product, so the
same code grades any printed formula it is compared against.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from rotsurf import jets
from rotsurf.errors import DegenerateMetric, DomainExcluded, ParabolicPoint
from rotsurf.jets import GUARD, Jet2, JVec3
from rotsurf.minkowski import CausalCharacter, LVec3, cross, inner
from rotsurf.surfaces import ParametricSurface

METRIC_GUARD = 1e-12


def xyz_combos(E, F, G, L, M, N):
    """The combinations X, Y, Z of first- and second-form coefficients entering the third-form operator."""
    X = E * M * M - 2.0 * F * L * M + G * L * L
    Y = E * M * N - F * L * N + G * L * M - F * M * M
    Z = G * M * M - 2.0 * F * N * M + E * N * N
    return X, Y, Z


class Frame:
    """All jet-valued geometric quantities at a batch of chart points.

    With ``strict=True`` any excluded or degenerate sample raises.  Otherwise
    such samples are evaluated at a harmless stand-in and flagged through
    ``valid`` and ``reason``.
    """

    def __init__(self, surface: ParametricSurface, u, v, strict: bool = True):
        u, v = np.broadcast_arrays(np.asarray(u, dtype=float), np.asarray(v, dtype=float))
        self.surface = surface
        self.u, self.v = u, v
        self.strict = strict
        self.valid = np.ones(u.shape, dtype=bool)
        self.reason = np.full(u.shape, "", dtype=object)

        inside = surface.admissible(u)
        if strict:
            surface.check_domain(u)
        else:
            self._flag(~inside, DomainExcluded.reason)
            u = np.where(inside, u, 1.0)

        R = surface.jet(u, v)
        Ru, Rv = R.d_u(), R.d_v()
        self.R, self.Ru, self.Rv = R, Ru, Rv
        self.Ruu, self.Ruv, self.Rvv = Ru.d_u(), Ru.d_v(), Rv.d_v()

        self.E = inner(Ru, Ru)
        self.F = inner(Ru, Rv)
        self.G = inner(Rv, Rv)
        detI = self.E * self.G - self.F * self.F
        bad = np.abs(detI.c[0, 0]) <= METRIC_GUARD
        if np.any(bad):
            if strict:
                raise DegenerateMetric(f"|det I| <= {METRIC_GUARD:g}")
            self._flag(bad, DegenerateMetric.reason)
            detI = detI.select(~bad, jets.constant(np.full(u.shape, -1.0), detI.order))
        self.detI = detI
        self.sign = np.where(detI.c[0, 0] < 0, -1.0, 1.0)
        self.root = jets.sqrt(abs(detI))

        self.n = cross(Ru, Rv) / self.root
        self.nu, self.nv = self.n.d_u(), self.n.d_v()

        self.L = inner(self.Ruu, self.n)
        self.M = inner(self.Ruv, self.n)
        self.N = inner(self.Rvv, self.n)
        self.detII = self.L * self.N - self.M * self.M
        Lw = -inner(Ru, self.nu)
        Mw = -inner(Ru, self.nv)
        Nw = -inner(Rv, self.nv)
        self.detII_weingarten = Lw * Nw - Mw * Mw

        self.e11 = inner(self.nu, self.nu)
        self.e12 = inner(self.nu, self.nv)
        self.e22 = inner(self.nv, self.nv)
        self.X, self.Y, self.Z = xyz_combos(self.E, self.F, self.G, self.L, self.M, self.N)

    def _flag(self, mask, why: str) -> None:
        fresh = mask & self.valid
        self.reason[fresh] = why
        self.valid &= ~mask

    def parabolic(self):
        return np.abs(self.detII.c[0, 0]) <= GUARD

    def require_nonparabolic(self) -> Jet2:
        """det II jet, guarded; flags or raises at parabolic samples."""
        bad = self.parabolic()
        detII = self.detII
        if np.any(bad):
            if self.strict:
                raise ParabolicPoint(f"|det II| <= {GUARD:g}")
            self._flag(bad, ParabolicPoint.reason)
            detII = detII.select(~bad, jets.constant(np.ones(self.u.shape), detII.order))
        return detII

    def mean_curvature(self, lorentz_sign: int = 1):
        E, F, G = self.E.value, self.F.value, self.G.value
        L, M, N = self.L.value, self.M.value, self.N.value
        return lorentz_sign * (E * N - 2.0 * F * M + G * L) / (2.0 * self.detI.value)

    def gaussian_curvature(self, lorentz_sign: int = 1):
        return lorentz_sign * self.detII.value / self.detI.value


@dataclass(frozen=True)
class PointGeometry:
    """Geometric quantities at one chart point, or arrays of them over a grid."""

    u: float
    v: float
    E: float
    F: float
    G: float
    detI: float
    n: LVec3
    L: float
    M: float
    N: float
    detII: float
    detII_weingarten: float
    e11: float
    e12: float
    e22: float
    H: float
    K: float
    X: float
    Y: float
    Z: float

    @property
    def character(self):
        """Causal character of the tangent plane: timelike iff det I < 0."""
        def classify(d):
            if abs(d) <= METRIC_GUARD:
                return CausalCharacter.LIGHTLIKE
            return CausalCharacter.TIMELIKE if d < 0 else CausalCharacter.SPACELIKE

        if np.ndim(self.detI) == 0:
            return classify(float(self.detI))
        return np.vectorize(classify, otypes=[object])(self.detI)

    def as_dict(self) -> dict:
        out = {}
        for key in ("u", "v", "E", "F", "G", "detI"):
            out[key] = getattr(self, key)
        for i, comp in enumerate(self.n, start=1):
            out[f"n{i}"] = comp
        for key in ("L", "M", "N", "detII", "detII_weingarten", "e11", "e12", "e22",
                    "H", "K", "X", "Y", "Z"):
            out[key] = getattr(self, key)
        return out


def _geometry_from_frame(fr: Frame, lorentz_sign: int) -> PointGeometry:
    scalar = fr.u.ndim == 0

    def val(j):
        return j.value if isinstance(j, Jet2) else j

    n = fr.n.value()
    return PointGeometry(
        u=float(fr.u) if scalar else fr.u,
        v=float(fr.v) if scalar else fr.v,
        E=val(fr.E), F=val(fr.F), G=val(fr.G), detI=val(fr.detI),
        n=LVec3.from_seq(n) if scalar else n,
        L=val(fr.L), M=val(fr.M), N=val(fr.N),
        detII=val(fr.detII), detII_weingarten=val(fr.detII_weingarten),
        e11=val(fr.e11), e12=val(fr.e12), e22=val(fr.e22),
        H=fr.mean_curvature(lorentz_sign), K=fr.gaussian_curvature(lorentz_sign),
        X=val(fr.X), Y=val(fr.Y), Z=val(fr.Z),
    )


def _check_sign(lorentz_sign: int) -> None:
    if lorentz_sign not in (1, -1):
        raise ValueError("lorentz_sign must be +1 or -1")


def point_geometry(surface: ParametricSurface, u, v, lorentz_sign: int = 1) -> PointGeometry:
    _check_sign(lorentz_sign)
    return _geometry_from_frame(Frame(surface, u, v), lorentz_sign)


def evaluate_grid(surface: ParametricSurface, u, v, lorentz_sign: int = 1):
    """Geometry over arrays of points without raising.

    Returns ``(geometry, valid, reason)``; entries where ``valid`` is False hold
    meaningless numbers and ``reason`` says why.
    """
    _check_sign(lorentz_sign)
    fr = Frame(surface, u, v, strict=False)
    return _geometry_from_frame(fr, lorentz_sign), fr.valid, fr.reason


def first_form(surface: ParametricSurface, u, v):
    fr = Frame(surface, u, v)
    return fr.E.value, fr.F.value, fr.G.value, fr.detI.value


def gauss_map(surface: ParametricSurface, u, v):
    fr = Frame(surface, u, v)
    n = fr.n.value()
    return LVec3.from_seq(n) if n.ndim == 1 else n


def second_form(surface: ParametricSurface, u, v):
    fr = Frame(surface, u, v)
    return fr.L.value, fr.M.value, fr.N.value, fr.detII.value


def third_form(surface: ParametricSurface, u, v):
    fr = Frame(surface, u, v)
    return fr.e11.value, fr.e12.value, fr.e22.value


def invariants(surface: ParametricSurface, u, v, lorentz_sign: int = 1):
    """Mean and Gaussian curvature from the shape operator I^{-1} II, times ``lorentz_sign``."""
    _check_sign(lorentz_sign)
    fr = Frame(surface, u, v)
    return fr.mean_curvature(lorentz_sign), fr.gaussian_curvature(lorentz_sign)


def normal_jet(surface: ParametricSurface, u, v) -> JVec3:
    return Frame(surface, u, v).n
