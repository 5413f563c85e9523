import numpy as np
import pytest
from scipy import stats

from betaproc.errors import DomainError, MeasureMismatchError, SizeLimitError
from betaproc.kernels import rho
from betaproc.matproc import JacobiMatrix
from betaproc.spectral import AtomicMeasure, EmpiricalMeasure
from betaproc.verify import (
    ConvergenceCurve,
    DistanceReport,
    VerifyReport,
    bessel_exactness_check,
    bounded_lipschitz_distance,
    chapman_kolmogorov_check,
    eigen_jpdf_check,
    entry_law_check,
    entry_limit,
    folding_check,
    ks_statistic,
    limit_law_convergence,
    moment_identity_check,
    replicate_rng,
    run_replicates,
    scaled_entry_convergence,
    spectral_empirical_closeness,
    spectral_empirical_gap,
    sup_cdf_distance,
    weight_law_check,
)


def test_replicate_streams_are_keyed():
    first = replicate_rng(7, 3).random(4)
    np.testing.assert_array_equal(first, replicate_rng(7, 3).random(4))
    assert not np.array_equal(first, replicate_rng(7, 4).random(4))
    assert not np.array_equal(first, replicate_rng(7, 16, 3).random(4))


def test_run_replicates_independent_of_threads():
    inline = run_replicates(lambda rng: rng.random(), seed=11, count=25)
    pooled = run_replicates(lambda rng: rng.random(), seed=11, count=25, threads=4)
    assert inline == pooled
    assert inline[5] == replicate_rng(11, 5).random()
    keyed = run_replicates(lambda rng: rng.random(), seed=11, count=3, key=(64,))
    assert keyed[0] == replicate_rng(11, 64, 0).random()


def test_ks_statistic():
    sample = stats.norm.rvs(size=500, random_state=np.random.default_rng(1))
    assert ks_statistic(sample, stats.norm.cdf).pvalue > 1e-3
    assert ks_statistic(sample + 1.0, stats.norm.cdf).pvalue < 1e-6
    with pytest.raises(DomainError):
        ks_statistic([], stats.norm.cdf)


def test_sup_cdf_distance():
    mu = AtomicMeasure([1.0, 2.0], [0.5, 0.5])
    nu = AtomicMeasure([2.0, 1.0], [0.3, 0.7])
    assert sup_cdf_distance(mu, nu) == pytest.approx(0.2)
    with pytest.raises(MeasureMismatchError):
        sup_cdf_distance(mu, AtomicMeasure([1.0, 3.0], [0.5, 0.5]))


def test_spectral_empirical_gap_bounds():
    J = JacobiMatrix([0.1, -0.4, 0.9, 0.0], [0.7, 0.3, 1.1])
    assert 0.0 <= spectral_empirical_gap(J) <= 1.0
    # equal first components give equal weights
    symmetric = JacobiMatrix([0.0, 0.0], [1.0])
    assert spectral_empirical_gap(symmetric) == pytest.approx(0.0, abs=1e-12)


def test_bounded_lipschitz_distance():
    mu = EmpiricalMeasure.from_points([0.0, 0.4, 1.3])
    assert bounded_lipschitz_distance(mu, mu) == pytest.approx(0.0, abs=1e-9)
    # δ_0 against δ_h: the optimum balances 2s against (1 - s) h
    for h in (0.5, 1.0, 6.0):
        value = bounded_lipschitz_distance(AtomicMeasure([0.0], [1.0]), AtomicMeasure([h], [1.0]))
        assert value == pytest.approx(2 * h / (2 + h), abs=1e-7)
    nu = EmpiricalMeasure.from_points([0.1, 0.5, 1.2])
    assert bounded_lipschitz_distance(mu, nu) == pytest.approx(bounded_lipschitz_distance(nu, mu), abs=1e-8)
    with pytest.raises(SizeLimitError):
        bounded_lipschitz_distance(mu, nu, max_atoms=5)


def test_reports_validate():
    with pytest.raises(DomainError):
        DistanceReport("l2", 0.1, 4, 10, 0)
    with pytest.raises(DomainError):
        DistanceReport("bounded_lipschitz", 2.5, 4, 10, 0)
    with pytest.raises(DomainError):
        ConvergenceCurve("exceedance", [64, 16], [0.1, 0.2], [0.1, 0.2], [0.1, 0.2], [10, 10], 0)
    curve = ConvergenceCurve("bounded_lipschitz", [16, 64, 256], [0.4, 0.1, 0.025], [0.3, 0.08, 0.02],
                             [0.5, 0.12, 0.03], [10, 10, 10], 0)
    assert curve.slope == pytest.approx(-1.0)
    assert curve.is_decreasing()
    assert list(curve.to_frame().columns) == ["n", "median_distance", "q25", "q75"]


def test_verify_report_verdict():
    report = VerifyReport("demo")
    report.add("reported", "value", 1.0)
    assert report.passed
    report.add("asserted", "value", 2.0, 1.0, 0.5, False)
    assert not report.passed
    frame = report.to_frame()
    assert frame.shape == (2, 6)
    assert report.to_dict()["checks"][1]["passed"] is False


def test_bessel_sampler_matches_closed_form():
    report = bessel_exactness_check(delta=3.0, t=1.0, samples=2000, seed=1)
    assert report.p_value > 1e-3


@pytest.mark.parametrize("kind", ["ou", "bessel"])
def test_chapman_kolmogorov(kind):
    report = chapman_kolmogorov_check(kind, x0=1.0, first=0.3, second=0.7, samples=2000, seed=2, delta=1.5)
    assert report.p_value > 1e-3
    with pytest.raises(DomainError):
        chapman_kolmogorov_check("cir", 1.0, 0.3, 0.7, 10, 2)


def test_eigen_jpdf_check_hermite():
    report = eigen_jpdf_check("hermite", beta=2.0, t=1.0, replicates=300, seed=3)
    checks = {check.name: check for check in report.checks}
    assert checks["total_mass_n1"].passed and checks["total_mass_n2"].passed
    assert checks["largest_eigenvalue_ks"].value > 1e-3


@pytest.mark.parametrize("kind,a", [("hermite", 0.0), ("laguerre", 1.0)])
def test_entry_laws_at_fixed_time(kind, a):
    report = entry_law_check(kind, n=4, beta=2.0, t=1.0, replicates=400, seed=4, a=a)
    assert len(report.details["p_values"]) == 7
    assert report.p_value > 1e-3 / 7
    assert report.details["max_abs_correlation"] < 0.25
    with pytest.raises(DomainError):
        entry_law_check("wishart", 4, 2.0, 1.0, 10, 4)


def test_entry_limits():
    assert entry_limit("hermite", 1, 0.5) == 0.0
    assert entry_limit("hermite_offdiag", 1, 0.5) == pytest.approx(0.5)
    assert entry_limit("wishart_diag", 1, 0.5) == 0.5
    assert entry_limit("wishart_diag", 2, 0.5) == 1.0
    with pytest.raises(DomainError):
        entry_limit("jacobi_diag", 1, 0.5)


def test_scaled_entries_concentrate():
    curve = scaled_entry_convergence("hermite_offdiag", k=1, t=1.0, beta=2.0, a=0.0, n_grid=[16, 64, 256],
                                     replicates=200, seed=5)
    assert curve.is_decreasing()
    assert curve.extras["limit"][0] == pytest.approx(np.sqrt(rho(1.0) / 2))
    assert curve.values[-1] <= curve.values[0]
    with pytest.raises(DomainError):
        scaled_entry_convergence("hermite_offdiag", k=16, t=1.0, beta=2.0, a=0.0, n_grid=[16, 64],
                                 replicates=5, seed=5)


def test_empirical_measure_approaches_semicircle():
    curve = limit_law_convergence("hermite_empirical", t=1.0, beta=2.0, a=0.0, n_grid=[8, 32, 128],
                                  replicates=20, seed=6, grid_size=500)
    assert curve.is_decreasing()
    assert curve.extras["mean_second_moment"][-1] == pytest.approx(rho(1.0) / 2, abs=0.05)
    with pytest.raises(DomainError):
        limit_law_convergence("hermite_singular", 1.0, 2.0, 0.0, [8], 2, 6)


@pytest.mark.parametrize("kind", ["wishart_empirical", "laguerre_singular"])
def test_laguerre_measures_approach_their_limit_laws(kind):
    curve = limit_law_convergence(kind, t=1.0, beta=2.0, a=0.5, n_grid=[8, 32, 128], replicates=20, seed=6,
                                  grid_size=500)
    assert curve.is_decreasing()
    assert curve.medians[-1] < 0.5 * curve.medians[0]


def test_weight_law_partial_sum():
    report = weight_law_check("hermite", n=5, beta=2.0, k=2, t=1.0, replicates=400, seed=7, t_alt=3.0)
    assert report.p_value > 1e-3
    assert abs(report.details["sample_mean"] - 0.4) <= 5 * report.details["standard_error"]
    assert report.details["two_sample_p_value"] > 1e-3


def test_weight_law_symmetrized():
    report = weight_law_check("symmetrized", n=4, beta=1.0, k=1, t=0.5, replicates=400, seed=8)
    assert report.p_value > 1e-3
    assert report.details["law"]["scale"] == 0.5


def test_weight_law_full_sum_is_degenerate():
    report = weight_law_check("wishart", n=4, beta=2.0, k=4, t=1.0, replicates=20, seed=9)
    assert report.passed
    assert report.value < 1e-10


def test_closeness_within_union_bound():
    report = spectral_empirical_closeness("hermite", n=20, beta=2.0, t=1.0, epsilon=0.3, replicates=50, seed=10)
    assert report.passed
    assert report.value <= report.reference
    with pytest.raises(DomainError):
        spectral_empirical_closeness("laguerre", 20, 2.0, 1.0, 0.3, 5, 10)


def test_moment_identity():
    report = moment_identity_check(matrices=30)
    assert report.passed
    assert [check.name for check in report.checks] == [f"moment_{k}" for k in range(1, 7)]


def test_folding_never_increases_distance():
    report = folding_check(instances=5)
    assert report.passed
    assert len(report.details["folded"]) == 5
