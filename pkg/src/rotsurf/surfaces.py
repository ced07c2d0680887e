"""Charts: the lightlike profile curve and rotational surfaces about the timelike axis."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable

import numpy as np

from rotsurf import jets
from rotsurf.errors import DomainExcluded
from rotsurf.jets import Jet2, JVec3
from rotsurf.minkowski import CausalCharacter, LVec3, rotate_about_axis

DEFAULT_U_EXCLUDE = 1e-3


def _pack(comps):
    if any(isinstance(c, Jet2) for c in comps):
        return JVec3(*(c if isinstance(c, Jet2) else jets.constant(c) for c in comps))
    arrs = [np.asarray(c, dtype=float) for c in comps]
    if all(a.ndim == 0 for a in arrs):
        return LVec3(*(float(a) for a in arrs))
    return np.stack(np.broadcast_arrays(*arrs))


def eta(u):
    """Height of the lightlike profile, integration constant fixed to 0."""
    return u * jets.sqrt(4.0 * u * u + 1.0) / 2.0 + jets.asinh(2.0 * u) / 4.0


def eta_prime(u):
    return jets.sqrt(4.0 * u * u + 1.0)


@dataclass(frozen=True)
class ProfileCurve:
    """Planar curve u -> (zeta(u), mu(u), eta(u)); each component accepts floats, arrays or jets."""

    zeta: Callable
    mu: Callable
    eta: Callable
    character: CausalCharacter = CausalCharacter.LIGHTLIKE
    name: str = "profile"

    def __call__(self, u):
        return _pack((self.zeta(u), self.mu(u), self.eta(u)))

    def derivative(self, u) -> np.ndarray:
        """gamma'(u) through the jet pipeline; shape (3,) + shape(u)."""
        g = self(jets.seed_u(u))
        return g.d_u().value()


def lightlike_profile() -> ProfileCurve:
    return ProfileCurve(
        zeta=lambda u: u * u,
        mu=lambda u: u * 1.0,
        eta=eta,
        character=CausalCharacter.LIGHTLIKE,
        name="lightlike (u^2, u, eta(u))",
    )


@dataclass(frozen=True)
class ParametricSurface:
    """Chart (u, v) -> L^3 with an excluded band |u| < u_exclude around the profile's singular point."""

    chart: Callable
    u_exclude: float = DEFAULT_U_EXCLUDE
    name: str = "surface"

    def __call__(self, u, v):
        return _pack(self.chart(u, v))

    def admissible(self, u):
        return np.abs(np.asarray(u, dtype=float)) >= self.u_exclude

    def check_domain(self, u) -> None:
        if not np.all(self.admissible(u)):
            raise DomainExcluded(f"|u| < {self.u_exclude:g} lies in the excluded band")

    def jet(self, u, v) -> JVec3:
        """Degree-3 jet of the chart seeded at (u, v)."""
        self.check_domain(u)
        u = np.asarray(u, dtype=float)
        v = np.asarray(v, dtype=float)
        u, v = np.broadcast_arrays(u, v)
        return _pack(self.chart(jets.seed_u(u), jets.seed_v(v)))

    def with_exclusion(self, u_exclude: float) -> ParametricSurface:
        return replace(self, u_exclude=u_exclude)


def make_rotational(profile: ProfileCurve, u_exclude: float = DEFAULT_U_EXCLUDE) -> ParametricSurface:
    """Sweep ``profile`` around the timelike axis: R(u, v) = T(v) gamma(u)."""

    def chart(u, v):
        g = (profile.zeta(u), profile.mu(u), profile.eta(u))
        return rotate_about_axis(v, g)

    return ParametricSurface(chart, u_exclude, name=f"rotational[{profile.name}]")


def _tl_chart(u, v):
    c, s = jets.cos(v), jets.sin(v)
    u2 = u * u
    return (u2 * c - u * s, u2 * s + u * c, eta(u))


def tl_surface(u_exclude: float = DEFAULT_U_EXCLUDE) -> ParametricSurface:
    """The (T,L)-type timelike rotational surface with lightlike profile."""
    return ParametricSurface(_tl_chart, u_exclude, name="(T,L)-type rotational surface")
