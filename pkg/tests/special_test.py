import numpy as np
import pytest
from scipy import special as sp

from betaproc.errors import DomainError, QuadratureError, SpecialFunctionOverflow
from betaproc.special import (
    bessel_i,
    bessel_i_series,
    bessel_ive,
    beta_function,
    integrate_quad,
    laguerre_poly,
    laguerre_table,
    log_bessel_i,
    log_beta,
    log_gamma,
)


def test_log_gamma_known_values():
    assert log_gamma(1.0) == pytest.approx(0.0, abs=1e-15)
    assert log_gamma(0.5) == pytest.approx(0.5723649429247001, rel=1e-14)
    assert log_gamma(10.0) == pytest.approx(np.log(362880.0), rel=1e-14)


def test_log_gamma_rejects_nonpositive():
    with pytest.raises(DomainError):
        log_gamma(0.0)
    with pytest.raises(DomainError):
        log_gamma([1.0, -2.0])


def test_log_beta_matches_gamma_identity():
    assert log_beta(2.5, 1.5) == pytest.approx(log_gamma(2.5) + log_gamma(1.5) - log_gamma(4.0), rel=1e-13)
    assert beta_function(1.0, 2.0) == pytest.approx(0.5, rel=1e-14)


def test_bessel_i_small_arguments():
    assert bessel_i(0.0, 0.0) == pytest.approx(1.0)
    assert bessel_i(1.0, 0.0) == pytest.approx(0.0, abs=1e-300)
    assert bessel_i(0.5, 1.0) == pytest.approx(np.sqrt(2.0 / np.pi) * np.sinh(1.0), rel=1e-13)


def test_bessel_i_agrees_with_series():
    z = np.array([0.1, 1.0, 5.0, 20.0])
    for nu in (-0.5, -0.25, 0.0, 1.5, 3.0):
        np.testing.assert_allclose(bessel_i(nu, z), bessel_i_series(nu, z), rtol=1e-11)


def test_bessel_i_overflow_and_scaled_forms():
    with pytest.raises(SpecialFunctionOverflow):
        bessel_i(0.0, 1000.0)
    scaled = bessel_ive(0.0, 1000.0)
    assert np.isfinite(scaled) and scaled > 0
    assert log_bessel_i(0.0, 1000.0) == pytest.approx(np.log(scaled) + 1000.0, rel=1e-14)


def test_bessel_rejects_orders_below_minus_one():
    with pytest.raises(DomainError):
        bessel_i(-1.0, 1.0)
    with pytest.raises(DomainError):
        bessel_ive(0.0, -1.0)


def test_laguerre_low_degrees_are_exact():
    x = np.linspace(0.0, 5.0, 11)
    np.testing.assert_array_equal(laguerre_poly(0, 0.7, x), np.ones_like(x))
    np.testing.assert_allclose(laguerre_poly(1, 0.7, x), 1.7 - x, rtol=0, atol=1e-15)


def test_laguerre_table_matches_scipy():
    x = np.array([0.0, 0.3, 2.0, 7.5])
    table = laguerre_table(12, 0.5, x)
    for degree in range(13):
        np.testing.assert_allclose(table[degree], sp.eval_genlaguerre(degree, 0.5, x), rtol=1e-11, atol=1e-12)
    assert laguerre_poly(5, 0.5, 2.0) == pytest.approx(sp.eval_genlaguerre(5, 0.5, 2.0), rel=1e-12)


def test_laguerre_domain():
    with pytest.raises(DomainError):
        laguerre_table(-1, 0.0, 1.0)
    with pytest.raises(DomainError):
        laguerre_table(3, -1.0, 1.0)


def test_integrate_quad_accuracy_and_failure():
    assert integrate_quad(lambda x: np.exp(-x), 0.0, np.inf) == pytest.approx(1.0, abs=1e-10)
    assert integrate_quad(lambda x: 1.0, -1.0, 1.0, weight="alg", wvar=(0.5, 0.5)) == pytest.approx(np.pi / 2)
    with pytest.raises(QuadratureError):
        integrate_quad(lambda x: np.sin(1.0 / x) / x, 1e-8, 1.0, epsabs=1e-14, epsrel=1e-14, limit=5)


@pytest.mark.parametrize("x", [0.1, 0.5, 1.5, 7.3, 40.0, 1000.0])
def test_log_gamma_recurrence(x):
    assert log_gamma(x + 1.0) - log_gamma(x) == pytest.approx(np.log(x), rel=1e-10)


@pytest.mark.parametrize("nu", [0.5, 1.0, 2.3, 5.0])
def test_bessel_i_recurrence(nu):
    z = np.geomspace(0.1, 50.0, 25)
    np.testing.assert_allclose(bessel_i(nu - 1.0, z) - bessel_i(nu + 1.0, z), 2.0 * nu / z * bessel_i(nu, z),
                               rtol=1e-8)


@pytest.mark.parametrize("alpha", [0.0, 0.5, 2.0])
def test_laguerre_orthogonality(alpha):
    norms = [np.exp(log_gamma(n + alpha + 1.0) - log_gamma(n + 1.0)) for n in range(7)]
    for m in range(7):
        for n in range(m, 7):
            value = integrate_quad(
                lambda x: laguerre_poly(m, alpha, x) * laguerre_poly(n, alpha, x) * x ** alpha * np.exp(-x),
                0.0, np.inf)
            expected = norms[n] if m == n else 0.0
            assert value == pytest.approx(expected, abs=1e-6 * np.sqrt(norms[m] * norms[n]))
