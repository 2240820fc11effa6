import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate

from bmhull import specfn
from bmhull.specfn import (
    Tolerance,
    bessel_i0,
    chi3,
    dirichlet_l_chi3,
    g_fn,
    gamma_real,
    max_abs_cdf,
    max_abs_cdf_gauss,
    max_abs_cdf_theta,
    max_cdf,
    normal_cdf,
    rect_integral,
)


INF = math.inf


def i0_series_mp(x, terms):
    # extended-precision power-series oracle
    with mpmath.workdps(50):
        q = mpmath.mpf(x) ** 2 / 4
        return float(mpmath.fsum(q**k / mpmath.factorial(k) ** 2 for k in range(terms)))


def test_i0_at_zero():
    assert bessel_i0(0.0) == 1.0


def test_i0_at_two_frozen():
    # 30-term series at 50 digits
    assert i0_series_mp(2, 30) == pytest.approx(2.2795853023360673, rel=1e-15)
    assert bessel_i0(2.0) == pytest.approx(2.2795853023360673, rel=1e-14)


def test_i0_at_twenty_vs_series():
    assert bessel_i0(20.0) == pytest.approx(i0_series_mp(20, 60), rel=1e-12)


@pytest.mark.parametrize("x", [0.3, 1.0, 7.5, 14.99, 15.0, 15.01, 22.0, 40.0, 123.4, 699.0])
def test_i0_against_mpmath(x):
    assert bessel_i0(x) == pytest.approx(float(mpmath.besseli(0, x)), rel=1e-12)


def test_i0_branches_overlap_at_crossover():
    x = 15.0
    series = specfn._i0_power_series(x)
    asym = specfn._i0_asymptotic_scaled(x) * math.exp(x) / math.sqrt(2 * math.pi * x)
    assert series == pytest.approx(asym, rel=1e-12)


@pytest.mark.parametrize("x", [-1.0, 700.5])
def test_i0_domain(x):
    with pytest.raises(ValueError):
        bessel_i0(x)


@given(st.floats(1.0, 700.0))
def test_i0_sanity_bounds(x):
    v = bessel_i0(x)
    assert v >= 1.0
    assert v >= math.exp(x) / (math.e * math.sqrt(x))


def test_i0_scaled_matches_unscaled():
    for x in [0.5, 10.0, 50.0]:
        assert specfn.bessel_i0e(x) == pytest.approx(bessel_i0(x) * math.exp(-x), rel=1e-13)


def test_normal_centre():
    assert normal_cdf(0.0) == 0.5


def test_normal_at_one():
    with mpmath.workdps(40):
        ref = float((1 + mpmath.erf(1 / mpmath.sqrt(2))) / 2)
    assert ref == 0.8413447460685429
    assert normal_cdf(1.0) == pytest.approx(ref, abs=1e-14)


@given(st.floats(-30, 30))
def test_normal_max_cdf_odd(z):
    assert max_cdf(z) + max_cdf(-z) == pytest.approx(0.0, abs=1e-15)


def test_normal_max_cdf_is_two_phi_minus_one():
    for z in [0.1, 1.0, 2.5]:
        assert max_cdf(z) == pytest.approx(2 * normal_cdf(z) - 1, abs=1e-15)


def test_max_abs_small_z():
    assert max_abs_cdf(0.05) < 1e-10


def test_max_abs_large_z():
    assert max_abs_cdf(8.0) > 1 - 1e-10


def test_max_abs_dual_series_at_one():
    assert max_abs_cdf_theta(1.0) == pytest.approx(max_abs_cdf_gauss(1.0), abs=1e-12)


@pytest.mark.parametrize("z", [0.3, 0.5, 1.0, 2.0, 4.0])
def test_max_abs_dual_series_agree(z):
    assert max_abs_cdf_theta(z) == pytest.approx(max_abs_cdf_gauss(z), abs=1e-10)


def test_max_abs_nondecreasing():
    zs = np.linspace(0.02, 6, 400)
    vals = [max_abs_cdf(z) for z in zs]
    assert all(b >= a for a, b in zip(vals, vals[1:]))


def test_max_abs_domain():
    with pytest.raises(ValueError):
        max_abs_cdf(0.0)


def test_max_abs_bounded_by_one_sided_max():
    # max |W| <= z implies max W <= z
    for z in [0.4, 1.0, 2.0]:
        assert max_abs_cdf(z) <= max_cdf(z)


def test_max_abs_non_convergence_raises():
    with pytest.raises(specfn.SeriesConvergenceError):
        max_abs_cdf_theta(50.0, Tolerance(max_terms=3))


def test_chi3_values():
    assert (chi3(1), chi3(2), chi3(3), chi3(4)) == (1, -1, 0, 1)


def test_chi3_matches_sine_formula():
    for n in range(-20, 21):
        assert chi3(n) == round(2 / math.sqrt(3) * math.sin(2 * math.pi * n / 3))


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_chi3_multiplicative(m, n):
    assert chi3(m * n) == chi3(m) * chi3(n)


def test_dirichlet_at_one():
    assert dirichlet_l_chi3(1.0) == pytest.approx(math.pi / (3 * math.sqrt(3)), abs=1e-15)


def test_dirichlet_normalisation():
    assert 3 * math.sqrt(3) / math.pi * dirichlet_l_chi3(1.0) == pytest.approx(1.0, abs=1e-12)


def test_dirichlet_at_two_direct_sum():
    n = np.arange(1, 1_000_001, dtype=np.float64)
    chi = np.array([0, 1, -1])[n.astype(np.int64) % 3]
    direct = math.fsum(chi / n**2)
    assert direct == pytest.approx(0.7813024128964862, abs=1e-11)
    assert dirichlet_l_chi3(2.0) == pytest.approx(direct, abs=1e-11)


def test_dirichlet_large_s():
    assert dirichlet_l_chi3(30.0) == pytest.approx(1 - 2.0**-30, abs=1e-9)


@pytest.mark.parametrize("s", [0.05, 0.5, 0.9999, 1.3, 3.0, 7.0])
def test_dirichlet_against_mpmath(s):
    assert dirichlet_l_chi3(s) == pytest.approx(float(mpmath.dirichlet(s, [0, 1, -1])), abs=1e-13)


def test_dirichlet_domain():
    with pytest.raises(ValueError):
        dirichlet_l_chi3(0.0)


def test_gamma_values():
    assert gamma_real(1.0) == 1.0
    assert gamma_real(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-12)
    assert gamma_real(5.0) == 24.0


def test_gamma_domain():
    with pytest.raises(ValueError):
        gamma_real(-1.0)


def test_g_values():
    assert g_fn(1, 1) == pytest.approx(math.sqrt(2))
    assert g_fn(3, 4) == pytest.approx(5 / 12)
    assert g_fn(-1, 1) == pytest.approx(-math.sqrt(2))


def test_g_axis():
    with pytest.raises(ValueError):
        g_fn(0, 1)


def dblquad_rect(a, b, c, d):
    val, _ = integrate.dblquad(
        lambda v, u: (u * u + v * v) ** -1.5, a, b, c, d, epsabs=1e-13, epsrel=1e-12
    )
    return val


def test_rect_quarter_plane():
    assert rect_integral(1, INF, 1, INF) == pytest.approx(2 - math.sqrt(2), abs=1e-12)


def test_rect_unit_square_and_sign():
    expected = math.sqrt(5) - math.sqrt(2) - math.sqrt(2) / 2
    assert dblquad_rect(1, 2, 1, 2) == pytest.approx(expected, abs=1e-11)
    assert rect_integral(1, 2, 1, 2) == pytest.approx(expected, abs=1e-14)
    # the corner combination g(a,c)+g(b,d)-g(a,d)-g(b,c) has the opposite sign
    printed = g_fn(1, 1) + g_fn(2, 2) - g_fn(1, 2) - g_fn(2, 1)
    assert printed == pytest.approx(-expected, abs=1e-14)


def test_rect_axis_crossing():
    expected = 2 * (math.sqrt(2) - math.sqrt(10) / 3)
    assert dblquad_rect(-1, 1, 1, 3) == pytest.approx(expected, abs=1e-10)
    assert rect_integral(-1, 1, 1, 3) == pytest.approx(expected, abs=1e-14)


@pytest.mark.parametrize(
    "box",
    [(-3, -1, -2, 5), (0.5, 2, -1, 1), (-2, 3, 0.25, 0.5), (0, 1, 1, 2), (2, 5, -7, -1)],
)
def test_rect_against_quadrature(box):
    assert rect_integral(*box) == pytest.approx(dblquad_rect(*box), abs=1e-9)


def test_rect_infinite_ends():
    assert rect_integral(-INF, INF, 1, INF) == pytest.approx(2.0, abs=1e-14)
    assert rect_integral(1, INF, -INF, INF) == pytest.approx(2.0, abs=1e-14)


@pytest.mark.parametrize("box", [(-1, 1, -1, 1), (0, 1, 0, 1), (-1, 0, 0, 2)])
def test_rect_origin_rejected(box):
    with pytest.raises(ValueError):
        rect_integral(*box)


@settings(max_examples=200)
@given(
    st.floats(0.2, 5), st.floats(0.1, 4), st.floats(-5, 5), st.floats(0.1, 4), st.floats(0.05, 0.95)
)
def test_rect_nonnegative_and_additive(a, w, c, h, frac):
    b, d = a + w, c + h
    whole = rect_integral(a, b, c, d)
    assert whole >= 0
    m = a + frac * w
    assert rect_integral(a, m, c, d) + rect_integral(m, b, c, d) == pytest.approx(whole, abs=1e-12)
    m = c + frac * h
    if m != 0:
        assert rect_integral(a, b, c, m) + rect_integral(a, b, m, d) == pytest.approx(whole, abs=1e-12)


def test_euler_log_two():
    assert specfn.euler_alternating_sum(lambda k: 1 / (k + 1)) == pytest.approx(math.log(2), abs=1e-15)


def test_euler_leibniz():
    assert 4 * specfn.euler_alternating_sum(lambda k: 1 / (2 * k + 1)) == pytest.approx(math.pi, abs=1e-14)
