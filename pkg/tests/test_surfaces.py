import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from rotsurf.errors import DomainExcluded
from rotsurf.minkowski import LVec3, apply, inner, rotation_timelike
from rotsurf.surfaces import eta, lightlike_profile, make_rotational, tl_surface

ETA1 = math.sqrt(5) / 2 + math.asinh(2) / 4  # 1.4789429...


def test_eta_values():
    assert eta(0.0) == 0.0
    assert eta(1.0) == pytest.approx(1.4789429, abs=1e-7)
    assert eta(-1.0) == pytest.approx(-1.4789429, abs=1e-7)
    assert eta(2.0) == pytest.approx(math.sqrt(17) + math.asinh(4) / 4, abs=1e-15)
    assert eta(2.0) == pytest.approx(4.6467838, abs=1e-7)


@given(st.floats(min_value=-50, max_value=50, allow_nan=False))
def test_eta_is_odd(u):
    assert eta(-u) == pytest.approx(-eta(u), abs=1e-12)


def test_profile_values():
    g = lightlike_profile()
    assert g(1.0).to_array() == pytest.approx([1, 1, ETA1], abs=1e-15)
    assert g(-1.0).to_array() == pytest.approx([1, -1, -ETA1], abs=1e-15)
    d = g.derivative(0.5)
    assert d == pytest.approx([1.0, 1.0, math.sqrt(2.0)])
    assert abs(inner(d, d)) <= 1e-12


def test_profile_is_lightlike_on_samples():
    u = np.concatenate([np.linspace(-5, -0.05, 500), np.linspace(0.05, 5, 500)])
    d = lightlike_profile().derivative(u)
    assert np.max(np.abs(inner(d, d)) / (1 + 4 * u**2)) <= 1e-9


def test_tl_surface_values():
    S = tl_surface()
    assert S(1.0, 0.0).to_array() == pytest.approx([1, 1, ETA1], abs=1e-15)
    assert S(1.0, math.pi / 2).to_array() == pytest.approx([-1, 1, ETA1], abs=1e-15)
    assert S(2.0, math.pi).to_array() == pytest.approx([-4, -2, 4.6467838], abs=1e-7)
    z = {S(1.1, v).x3 for v in (0.0, 1.0, 2.0)}
    assert len(z) == 1


def test_rotational_builder_matches_closed_chart():
    rot = make_rotational(lightlike_profile())
    S = tl_surface()
    assert rot(1.7, 0.0).to_array() == pytest.approx(lightlike_profile()(1.7).to_array())
    assert rot(1.3, 0.4 + 2 * math.pi).to_array() == pytest.approx(rot(1.3, 0.4).to_array(), abs=1e-13)
    U, V = np.meshgrid(np.linspace(0.2, 3, 21), np.linspace(0, 2 * np.pi, 21, endpoint=False))
    assert np.max(np.abs(rot(U, V) - S(U, V))) <= 1e-13


@given(st.floats(min_value=0.2, max_value=3.0), st.floats(min_value=0, max_value=6.3),
       st.floats(min_value=-10, max_value=10))
def test_rotation_equivariance(u, v, c):
    S = tl_surface()
    lhs = apply(rotation_timelike(c), S(u, v)).to_array()
    assert np.max(np.abs(lhs - S(u, v + c).to_array())) <= 1e-12 * (1 + np.abs(lhs).max())


def test_jet_values_agree_with_scalar_chart():
    S = tl_surface()
    u, v = np.array([0.3, -1.2, 2.7]), np.array([0.1, 3.0, 5.5])
    assert np.max(np.abs(S.jet(u, v).value() - S(u, v))) <= 1e-13


def test_geometric_use_respects_excluded_band():
    S = tl_surface()
    with pytest.raises(DomainExcluded):
        S.jet(1e-4, 0.0)
    assert S.with_exclusion(1e-5).jet(1e-4, 0.0).value().shape == (3,)
    # plain evaluation (meshing) is allowed anywhere
    assert isinstance(S(0.0, 1.0), LVec3)
