import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from gauge_lab.cartesian import (CartesianGauge, CartesianKind, axis_probe,
                                 closed_form_axis_limit, eval_potential,
                                 reduced_amplitude, spherical_component)
from gauge_lab.errors import DegenerateDirection, OnSingularSet
from gauge_lab.gauges import make_gauge

KINDS = list(CartesianKind)
E3 = (0.0, 0.0, 1.0)


def naive(kind: CartesianKind, g: float, n, r) -> np.ndarray:
    """Textbook formulas, evaluated literally (fine away from the axis)."""
    r, n = np.asarray(r, float), np.asarray(n, float)
    rr, rn, rxn = np.linalg.norm(r), r @ n, np.cross(r, n)
    if kind is CartesianKind.SCHWINGER:
        return -g * rxn * rn / (rr * (rr ** 2 - rn ** 2))
    if kind is CartesianKind.DIRAC_PLUS:
        return g * rxn / (rr * (rr + rn))
    return -g * rxn / (rr * (rr - rn))


def unit_directions(rng, count, max_m3=0.9):
    out = []
    while len(out) < count:
        v = rng.normal(size=3)
        v /= np.linalg.norm(v)
        if abs(v[2]) <= max_m3:
            out.append(v)
    return out


# -- eval_potential -----------------------------------------------------------

@pytest.mark.parametrize("kind", KINDS)
def test_matches_naive_formula_off_axis(kind, rng):
    n = rng.normal(size=3)
    n /= np.linalg.norm(n)
    gauge = CartesianGauge(kind, 1.7, tuple(n))
    for _ in range(200):
        r = rng.normal(size=3) * rng.uniform(0.1, 10)
        assert_allclose(eval_potential(gauge, r), naive(kind, 1.7, n, r), rtol=1e-9)


def test_documented_near_axis_values():
    eps = 1e-6
    s = eval_potential(CartesianGauge(CartesianKind.SCHWINGER), (eps, 0, 1))
    assert_allclose(s, (0, 1 / eps, 0), rtol=1e-9, atol=1e-9)
    d = eval_potential(CartesianGauge(CartesianKind.DIRAC_PLUS), (eps, 0, 1))
    assert_allclose(d, (0, -eps / 2, 0), rtol=1e-6, atol=1e-20)


@pytest.mark.parametrize("kind, r", [
    (CartesianKind.SCHWINGER, (0, 0, 1)),
    (CartesianKind.SCHWINGER, (0, 0, -2)),
    (CartesianKind.DIRAC_PLUS, (0, 0, -1)),
    (CartesianKind.DIRAC_MINUS, (0, 0, 1)),
    (CartesianKind.DIRAC_PLUS, (0, 0, 0)),
])
def test_singular_set(kind, r):
    with pytest.raises(OnSingularSet):
        eval_potential(CartesianGauge(kind), r)


def test_dirac_regular_half_axes_are_zero():
    assert_allclose(eval_potential(CartesianGauge(CartesianKind.DIRAC_PLUS), (0, 0, 1)), 0.0)
    assert_allclose(eval_potential(CartesianGauge(CartesianKind.DIRAC_MINUS), (0, 0, -1)), 0.0)


def test_direction_must_be_unit():
    with pytest.raises(ValueError):
        CartesianGauge(CartesianKind.SCHWINGER, 1.0, (0, 0, 2))


def test_cancellation_free_near_the_string_side():
    # far below the Dirac(+) regular axis, r + r.n is tiny; the naive form loses digits
    g = CartesianGauge(CartesianKind.DIRAC_PLUS)
    eps = 1e-7
    A = eval_potential(g, (eps, 0, -1))
    # exact: rho^2 / (r - z) = 2 for the denominator r + z up to O(eps^2)
    assert_allclose(A[1], -eps / (math.hypot(eps, 1) * (eps ** 2 / (math.hypot(eps, 1) + 1))),
                    rtol=1e-12)


# -- agreement with the spherical catalog --------------------------------------

@pytest.mark.parametrize("kind, name", [
    (CartesianKind.SCHWINGER, "schwinger"),
    (CartesianKind.DIRAC_PLUS, "dirac-plus"),
    (CartesianKind.DIRAC_MINUS, "dirac-minus"),
])
def test_spherical_component_reproduces_catalog(kind, name, rng):
    g = -1.3
    gauge = CartesianGauge(kind, g)
    field = make_gauge(name, g)
    for _ in range(300):
        theta = rng.uniform(0.01, math.pi - 0.01)
        phi = rng.uniform(-math.pi, math.pi)
        rad = rng.uniform(0.1, 5)
        r = rad * np.array([math.sin(theta) * math.cos(phi),
                            math.sin(theta) * math.sin(phi), math.cos(theta)])
        expected = field.sample(np.array([theta]))[0]
        assert spherical_component(gauge, r) == pytest.approx(expected, rel=1e-10, abs=1e-12)


# -- axis probe -----------------------------------------------------------------

def test_probe_documented_cases():
    s = axis_probe(CartesianGauge(CartesianKind.SCHWINGER), 1.0, (1, 0, 0))
    assert s.divergence_order == pytest.approx(1.0, abs=0.01)
    assert_allclose(s.coefficient, (0, 1, 0), atol=1e-6)

    d = axis_probe(CartesianGauge(CartesianKind.DIRAC_PLUS), 1.0, (1, 0, 0))
    assert d.divergence_order == pytest.approx(0.0, abs=0.01)
    assert_allclose(d.coefficient, 0.0, atol=1e-9)

    m = np.array([0.3, -0.5, 0.0])
    m[2] = math.sqrt(1 - m @ m) * 0.5
    m /= np.linalg.norm(m)
    below = axis_probe(CartesianGauge(CartesianKind.DIRAC_PLUS), -1.0, m)
    assert below.divergence_order == pytest.approx(1.0, abs=0.01)
    assert below.amplitude == pytest.approx(-2.0, rel=1e-6)


def test_probe_origin_magnitudes_are_reduced_amplitudes():
    # |g (m3 - 1)| is the spherical amplitude; the vector coefficient carries 1/sin(Theta)
    m = np.array([math.sqrt(3) / 2, 0.0, 0.5])
    p = axis_probe(CartesianGauge(CartesianKind.DIRAC_PLUS), 0.0, m)
    assert abs(p.amplitude) == pytest.approx(0.5, rel=1e-9)
    assert np.linalg.norm(p.coefficient) == pytest.approx(0.5 / (math.sqrt(3) / 2), rel=1e-9)
    q = axis_probe(CartesianGauge(CartesianKind.DIRAC_PLUS), 0.0, (0.6, 0, 0.8))
    assert abs(q.amplitude) == pytest.approx(0.2, rel=1e-9)


def test_dirac_minus_coefficient_sign_from_direct_evaluation():
    p = axis_probe(CartesianGauge(CartesianKind.DIRAC_MINUS), 1.0, (0, 1, 0))
    c = closed_form_axis_limit(CartesianGauge(CartesianKind.DIRAC_MINUS), 1.0, (0, 1, 0))
    eps = 1e-4
    direct = eps * naive(CartesianKind.DIRAC_MINUS, 1.0, E3, (0, eps, 1))
    assert_allclose(p.coefficient, (-2, 0, 0), atol=1e-6)
    assert_allclose(c.coefficient, (-2, 0, 0), atol=1e-15)
    assert_allclose(direct, (-2, 0, 0), rtol=1e-3)


def test_schwinger_origin_coefficient_vanishes_for_horizontal_approach():
    c = closed_form_axis_limit(CartesianGauge(CartesianKind.SCHWINGER), 0.0, (1, 0, 0))
    assert c.order == 1 and np.all(c.coefficient == 0.0)


@pytest.mark.parametrize("m", [(0, 0, 1), (0, 0, -1)])
def test_probe_rejects_axial_approach(m):
    with pytest.raises(DegenerateDirection):
        axis_probe(CartesianGauge(CartesianKind.SCHWINGER), 1.0, m)
    with pytest.raises(DegenerateDirection):
        closed_form_axis_limit(CartesianGauge(CartesianKind.SCHWINGER), 1.0, m)


def test_probe_rejects_bad_schedule():
    with pytest.raises(ValueError):
        axis_probe(CartesianGauge(CartesianKind.SCHWINGER), 1.0, (1, 0, 0), [1e-3, 1e-2, 1e-4])


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("z", [-1.0, 0.0, 1.0])
def test_probe_structure(kind, z, rng):
    for m in unit_directions(rng, 5):
        p = axis_probe(CartesianGauge(kind, 1.0), z, m)
        assert p.fit_residual >= 0 and abs(p.direction_match) <= 1 + 1e-9
        c = p.coefficient
        scale = max(np.linalg.norm(c), 1e-300)
        # azimuthal: orthogonal to e3 and to the radial direction (m1, m2, 0)
        assert abs(c[2]) <= 1e-6 * scale + 1e-12
        assert abs(c[0] * m[0] + c[1] * m[1]) <= 1e-6 * scale + 1e-12


def test_flipping_n_swaps_the_dirac_strings():
    m = (0.6, 0.0, 0.8)
    up = closed_form_axis_limit(CartesianGauge(CartesianKind.DIRAC_PLUS, 1.0, (0, 0, -1)), -1.0, m)
    assert up.order == 0
    probe = axis_probe(CartesianGauge(CartesianKind.DIRAC_PLUS, 1.0, (0, 0, -1)), 1.0, m)
    closed = closed_form_axis_limit(CartesianGauge(CartesianKind.DIRAC_PLUS, 1.0, (0, 0, -1)), 1.0, m)
    assert_allclose(probe.coefficient, closed.coefficient, rtol=1e-6)


@settings(max_examples=60, deadline=None)
@given(st.floats(-0.9, 0.9), st.floats(-math.pi, math.pi), st.sampled_from(KINDS),
       st.sampled_from([-1.0, 0.0, 1.0]), st.sampled_from([0.5, -2.0]))
def test_reduced_amplitude_of_closed_form(m3, phi, kind, z, g):
    s = math.sqrt(1 - m3 * m3)
    m = np.array([s * math.cos(phi), s * math.sin(phi), m3])
    lim = closed_form_axis_limit(CartesianGauge(kind, g), z, m)
    assert reduced_amplitude(lim.coefficient, m) == pytest.approx(lim.amplitude, rel=1e-12, abs=1e-12)
