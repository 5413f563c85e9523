import numpy as np
import pytest
from scipy import stats

from betaproc.errors import BranchCutError, DomainError
from betaproc.kernels import OUParams, rho
from betaproc.laws import (
    DirichletLaw,
    EigenJpdfParams,
    LimitLaw,
    WeightLaw,
    chebyshev_polys,
    chebyshev_union_bound,
    discretize,
    eigen_jpdf_total_mass,
    eigen_max_cdf,
    first_component_log_density,
    hermite_eigen_log_jpdf,
    hermite_energy,
    limit_cdf,
    limit_density,
    limit_moment_operator,
    limit_moment_quadrature,
    limit_moments,
    limit_quantile,
    limiting_operator,
    mp_orthogonal_poly,
    stieltjes_by_quadrature,
    stieltjes_inversion,
    stieltjes_mp,
    stieltjes_mp_continued_fraction,
    stieltjes_mp_f,
    weight_distribution,
    wishart_eigen_log_jpdf,
)
from betaproc.special import integrate_quad


def test_hermite_eigen_density_n1_is_gaussian():
    params = EigenJpdfParams("hermite", 1, 2.0, 1.0)
    variance = rho(1.0) / 2.0
    assert np.exp(hermite_eigen_log_jpdf([0.3], params)) == pytest.approx(
        stats.norm(scale=np.sqrt(variance)).pdf(0.3), rel=1e-12)


def test_eigen_density_edges():
    params = EigenJpdfParams("hermite", 2, 1.0, 1.0)
    assert hermite_eigen_log_jpdf([0.5, 0.5], params) == -np.inf
    assert hermite_energy(1.0, [0.2, 0.2]) == np.inf
    wishart = EigenJpdfParams("wishart", 2, 1.0, 1.0, a=0.0)
    assert wishart_eigen_log_jpdf([-0.1, 1.0], wishart) == -np.inf
    with pytest.raises(DomainError):
        hermite_eigen_log_jpdf([0.1, 0.2, 0.3], params)
    with pytest.raises(DomainError):
        EigenJpdfParams("wishart", 2, 1.0, 1.0)


def test_wishart_density_n1_is_gamma_law():
    params = EigenJpdfParams("wishart", 1, 2.0, 0.7, a=0.5)
    shape, scale = 1.5, 2.0 * params.rho / 2.0
    assert np.exp(wishart_eigen_log_jpdf([0.8], params)) == pytest.approx(
        stats.gamma(shape, scale=scale).pdf(0.8), rel=1e-12)


@pytest.mark.parametrize("kind,beta,a", [("hermite", 1.0, None), ("hermite", 2.5, None),
                                         ("wishart", 1.0, 0.0), ("wishart", 2.0, 1.5)])
def test_eigen_densities_integrate_to_one(kind, beta, a):
    for n in (1, 2):
        params = EigenJpdfParams(kind, n, beta, 0.9, a)
        assert eigen_jpdf_total_mass(params) == pytest.approx(1.0, abs=1e-4)


def test_printed_wishart_form_is_not_normalized():
    params = EigenJpdfParams("wishart", 1, 2.0, 1.0, a=0.0)
    assert abs(eigen_jpdf_total_mass(params, verbatim=True) - 1.0) > 1e-3


def test_eigen_max_cdf_is_monotone():
    params = EigenJpdfParams("hermite", 2, 2.0, 1.0)
    values = eigen_max_cdf(params, np.linspace(-1.0, 3.0, 9))
    assert np.all(np.diff(values) >= -1e-12)
    assert values[-1] == pytest.approx(1.0, abs=1e-3)
    with pytest.raises(DomainError):
        eigen_max_cdf(EigenJpdfParams("hermite", 1, 2.0, 1.0), [0.0, 1.0])


def test_weight_law_moments():
    law = weight_distribution("hermite", 3, 2.0, 1)
    assert law.alpha == (1.0, 2.0)
    assert law.mean == pytest.approx(1.0 / 3.0)
    assert law.variance == pytest.approx(stats.beta(1.0, 2.0).var())
    assert law.central_moment(4) == pytest.approx(stats.beta(1.0, 2.0).expect(lambda x: (x - 1 / 3) ** 4))
    half = weight_distribution("symmetrized", 4, 1.0, 2)
    assert half.support == (0.0, 0.5)
    assert half.mean == pytest.approx(0.25)
    assert half.cdf(0.5) == pytest.approx(1.0)


def test_degenerate_weight_law():
    law = weight_distribution("wishart", 4, 2.0, 4)
    assert law.kind == "point" and law.scale == 1.0
    assert law.cdf(0.999) == 0.0 and law.cdf(1.0) == 1.0
    assert weight_distribution("symmetrized", 4, 2.0, 4).scale == 0.5
    with pytest.raises(DomainError):
        weight_distribution("hermite", 3, 2.0, 0)
    with pytest.raises(DomainError):
        WeightLaw("beta", (1.0,))


def test_dirichlet_law():
    law = weight_distribution("dirichlet", 3, 2.0)
    assert isinstance(law, DirichletLaw)
    assert law.pdf([0.2, 0.3, 0.5]) == pytest.approx(2.0)
    assert law.marginal(0).alpha == (1.0, 2.0)
    with pytest.raises(DomainError):
        law.cdf(0.5)
    assert law.to_dict()["kind"] == "dirichlet"


def test_union_bound_decreases_with_epsilon():
    assert chebyshev_union_bound(256, 2.0, 0.2) < chebyshev_union_bound(256, 2.0, 0.1)
    with pytest.raises(DomainError):
        chebyshev_union_bound(8, 2.0, 0.0)


def test_first_component_density_on_circle():
    # n = 2, β = 1: uniform on the quarter circle, density 2/π against arc length
    angle = 0.3
    q = [np.cos(angle), np.sin(angle)]
    assert np.exp(first_component_log_density(q, 1.0)) == pytest.approx(2.0 / np.pi)
    assert first_component_log_density([1.0, 0.0], 1.0) == -np.inf


def test_chebyshev_orthonormality():
    t = 1.3
    radius = np.sqrt(2 * rho(t))
    scale = 2.0 / (np.pi * radius ** 2)
    for m in range(1, 5):
        for n in range(1, 5):
            value = integrate_quad(lambda x: scale * chebyshev_polys(m, t, x) * chebyshev_polys(n, t, x),
                                   -radius, radius, weight="alg", wvar=(0.5, 0.5), epsabs=1e-12)
            assert value == pytest.approx(1.0 if m == n else 0.0, abs=1e-8)
    assert chebyshev_polys(0, t, 0.1) == 0.0
    with pytest.raises(DomainError):
        chebyshev_polys(2, t, 2 * radius)


def test_mp_polynomials_orthogonal():
    rho_value = 0.6
    for m in range(4):
        for n in range(4):
            value = integrate_quad(lambda x: mp_orthogonal_poly(m, x, rho_value) * mp_orthogonal_poly(n, x, rho_value)
                                   / (2 * np.pi * rho_value), 0.0, 4 * rho_value, weight="alg", wvar=(-0.5, 0.5),
                                   epsabs=1e-13)
            assert value == pytest.approx(rho_value ** (2 * n) if m == n else 0.0, abs=1e-9)
    assert LimitLaw("mp", rho_value).support == (0.0, 4 * rho_value)


@pytest.mark.parametrize("kind", ["semicircle", "mp", "quarter", "symmetrized"])
def test_limit_laws_are_distributions(kind):
    law = LimitLaw(kind, 0.8)
    lower, upper = law.support
    assert limit_moment_quadrature(law, 0) == pytest.approx(1.0, abs=1e-9)
    assert limit_cdf(law, lower) == pytest.approx(0.0, abs=1e-12)
    assert limit_cdf(law, upper) == pytest.approx(1.0, abs=1e-12)
    middle = 0.5 * (lower + upper) + 0.1 * (upper - lower)
    step = 1e-5
    slope = (limit_cdf(law, middle + step) - limit_cdf(law, middle - step)) / (2 * step)
    assert slope == pytest.approx(limit_density(law, middle), rel=1e-6)
    assert limit_quantile(law, limit_cdf(law, middle)) == pytest.approx(middle, abs=1e-6)


def test_limit_moments_closed_forms():
    rho_value = 0.7
    assert limit_moments(LimitLaw("semicircle", rho_value), 2) == pytest.approx(rho_value / 2, rel=1e-12)
    assert limit_moments(LimitLaw("mp", rho_value), 1) == pytest.approx(rho_value, rel=1e-12)
    assert limit_moments(LimitLaw("mp", rho_value), 2) == pytest.approx(2 * rho_value ** 2, rel=1e-12)
    assert limit_moments(LimitLaw("quarter", rho_value), 2) == pytest.approx(rho_value, rel=1e-12)
    assert limit_moments(LimitLaw("symmetrized", rho_value), 3) == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(DomainError):
        limit_moments(LimitLaw("mp", rho_value), 21)


@pytest.mark.parametrize("kind", ["semicircle", "mp", "quarter", "symmetrized"])
def test_operator_and_quadrature_moments_agree(kind):
    law = LimitLaw(kind, 1.0 - np.exp(-1.0))
    for k in range(1, 11):
        operator = limit_moment_operator(law, k)
        assert limit_moment_quadrature(law, k) == pytest.approx(operator, rel=1e-9, abs=1e-12)


def test_limiting_operator_shapes():
    J = limiting_operator("wishart", 0.5, 4)
    np.testing.assert_allclose(J.diag, [0.5, 1.0, 1.0, 1.0])
    np.testing.assert_allclose(J.offdiag, 0.5)
    np.testing.assert_allclose(limiting_operator("symmetrized", 0.5, 3).offdiag,
                               np.sqrt(2.0) * limiting_operator("hermite", 0.5, 3).offdiag)
    with pytest.raises(DomainError):
        limiting_operator("other", 0.5, 3)


def test_discretize_places_midpoint_quantiles():
    law = LimitLaw("semicircle", 0.5)
    atoms = discretize(law, 2000)
    assert atoms.size == 2000
    np.testing.assert_allclose(atoms.weights, 1 / 2000)
    assert atoms.moment(1) == pytest.approx(0.0, abs=1e-6)
    assert atoms.moment(2) == pytest.approx(0.25, rel=1e-3)


@pytest.mark.parametrize("z", [2.5, 3.0, 4.0, 7.0, 20.0])
def test_stieltjes_forms_agree(z):
    rho_value = 0.6
    closed = stieltjes_mp(z, rho_value)
    assert closed.real == pytest.approx(stieltjes_by_quadrature(z, rho_value), abs=1e-8)
    assert stieltjes_mp_continued_fraction(z, rho_value).real == pytest.approx(closed.real, abs=1e-8)
    tail = stieltjes_mp_f(z, rho_value)
    assert abs(tail - rho_value ** 2 / (z - 2 * rho_value - tail)) < 1e-12
    assert abs(closed - 1.0 / (z - rho_value - tail)) < 1e-12


def test_stieltjes_inversion_recovers_density():
    rho_value = 0.6
    law = LimitLaw("mp", rho_value)
    x = np.array([0.3, 1.0, 2.0])
    np.testing.assert_allclose(stieltjes_inversion(x, rho_value, 1e-6), limit_density(law, x), atol=1e-4)


def test_stieltjes_branch_cut():
    with pytest.raises(BranchCutError):
        stieltjes_mp(1.0, 0.6)
    with pytest.raises(BranchCutError):
        stieltjes_by_quadrature(0.0, 0.6)
    assert stieltjes_mp(-1.0, 0.6).real < 0


def test_limit_law_serialization():
    law = LimitLaw.at_time("mp", 2.0, OUParams(a=1.0, sigma=1.0))
    assert LimitLaw.from_dict(law.to_dict()) == law
    with pytest.raises(DomainError):
        LimitLaw("circle", 1.0)
