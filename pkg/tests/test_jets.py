import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rotsurf import jets
from rotsurf.errors import DivisionNearZero, OrderTooHigh, SqrtDomain
from rotsurf.jets import Jet2, constant, seed_u, seed_v

from _oracles import CHART_FUNCTIONS, admissible_points, rel, richardson_partial


def coeffs(j):
    return {(a, b): j.coeff(a, b) for a in range(4) for b in range(4) if a + b <= 3}


def test_seeds_and_constant():
    u = seed_u(2.0)
    assert coeffs(u) == {**{k: 0.0 for k in coeffs(u)}, (0, 0): 2.0, (1, 0): 1.0}
    v = seed_v(-1.0)
    assert v.value == -1.0 and v.coeff(0, 1) == 1.0 and v.coeff(1, 0) == 0.0
    c = constant(5.0)
    assert c.value == 5.0 and sum(abs(x) for x in coeffs(c).values()) == 5.0


def test_polynomial_product():
    u, v = seed_u(1.0), seed_v(2.0)
    f = u * u * v
    assert f.value == 2.0
    assert f.partial(1, 0) == 4.0
    assert f.partial(0, 1) == 1.0
    assert f.coeff(2, 0) == 2.0
    assert f.partial(1, 1) == 2.0
    assert f.coeff(2, 1) == 1.0


def test_binomial():
    f = (seed_u(0.0) + seed_v(0.0)) ** 3
    assert (f.coeff(3, 0), f.coeff(2, 1), f.coeff(1, 2), f.coeff(0, 3)) == (1, 3, 3, 1)


def test_quotient_of_self_is_one():
    f = jets.sin(seed_u(0.7)) * seed_v(1.3) + 2.0
    q = f / f
    assert q.value == pytest.approx(1.0)
    assert all(abs(x) < 1e-14 for k, x in coeffs(q).items() if k != (0, 0))


def test_elementary_functions():
    u = seed_u(1.0)
    s = jets.sqrt(4 * u * u + 1)
    assert s.value == pytest.approx(math.sqrt(5), abs=1e-15)
    assert s.partial(1, 0) == pytest.approx(4 / math.sqrt(5), abs=1e-15)
    sn = jets.sin(seed_u(math.pi / 6))
    assert sn.value == pytest.approx(0.5) and sn.partial(1, 0) == pytest.approx(math.sqrt(3) / 2)
    a = jets.asinh(2 * u)
    assert a.value == pytest.approx(math.log(2 + math.sqrt(5)))
    assert a.partial(1, 0) == pytest.approx(2 / math.sqrt(5))


def test_partial_examples():
    assert (seed_u(2.0) ** 3).partial(3, 0) == pytest.approx(6.0)
    assert jets.sin(seed_u(0.0)).partial(3, 0) == pytest.approx(-1.0)
    assert (seed_u(3.0) * seed_v(4.0)).partial(1, 1) == 1.0
    with pytest.raises(OrderTooHigh):
        seed_u(1.0).partial(2, 2)


def test_guard_errors():
    with pytest.raises(DivisionNearZero):
        constant(1.0) / seed_u(0.0)
    with pytest.raises(SqrtDomain):
        jets.sqrt(seed_u(-1.0))
    with pytest.raises(SqrtDomain):
        jets.sqrt(constant(0.0))


def test_derivative_lowers_order():
    f = jets.cos(seed_u(0.4) * seed_v(0.9))
    fu = f.d_u()
    assert fu.order == 2
    assert fu.partial(1, 1) == pytest.approx(f.partial(2, 1))
    with pytest.raises(OrderTooHigh):
        fu.partial(3, 0)
    # mixing orders truncates to the smaller one
    assert (fu + f).order == 2 and (fu * f).order == 2


def test_batched_matches_scalar():
    us, vs = np.array([0.3, 1.1, -2.0]), np.array([0.2, 4.0, 1.0])
    fb = jets.asinh(seed_u(us) * seed_v(vs)) / (seed_u(us) ** 2 + 1.0)
    for k in range(3):
        fs = jets.asinh(seed_u(us[k]) * seed_v(vs[k])) / (seed_u(us[k]) ** 2 + 1.0)
        for a, b in coeffs(fs):
            assert fb.coeff(a, b)[k] == pytest.approx(fs.coeff(a, b), rel=1e-14, abs=1e-15)


def _jet_of(name, u, v):
    from rotsurf.surfaces import eta, eta_prime, tl_surface

    uj, vj = seed_u(u), seed_v(v)
    if name == "etap":
        return eta_prime(uj)
    if name == "eta":
        return eta(uj)
    return tl_surface().chart(uj, vj)[int(name[1]) - 1]


@pytest.mark.parametrize("name", sorted(CHART_FUNCTIONS))
def test_partials_match_richardson(name):
    us, vs = admissible_points(10, seed=11)
    worst = 0.0
    for u, v in zip(us, vs):
        j = _jet_of(name, u, v)
        for a in range(4):
            for b in range(4 - a):
                fd = richardson_partial(CHART_FUNCTIONS[name], u, v, a, b)
                worst = max(worst, float(rel(j.partial(a, b), fd)))
    assert worst <= 1e-6


jet_values = st.floats(min_value=-3, max_value=3, allow_nan=False)


def random_jet(vals):
    c = np.zeros((4, 4))
    for (a, b), x in zip([(a, b) for a in range(4) for b in range(4) if a + b <= 3], vals):
        c[a, b] = x
    return Jet2(c)


@settings(max_examples=100)
@given(st.lists(jet_values, min_size=30, max_size=30))
def test_distributive(vals):
    a, b, c = random_jet(vals[:10]), random_jet(vals[10:20]), random_jet(vals[20:])
    lhs, rhs = (a + b) * c, a * c + b * c
    # coefficientwise magnitude of the products being summed
    scale = ((Jet2(np.abs(a.c)) + Jet2(np.abs(b.c))) * Jet2(np.abs(c.c))).c
    assert np.all(np.abs(lhs.c - rhs.c) <= 1e-13 * np.maximum(scale, 1e-300))


@given(st.lists(jet_values, min_size=10, max_size=10))
def test_pythagorean_identity(vals):
    j = random_jet(vals)
    one = jets.sin(j) ** 2 + jets.cos(j) ** 2
    expected = constant(1.0).c
    assert np.max(np.abs(one.c - expected)) <= 1e-12
