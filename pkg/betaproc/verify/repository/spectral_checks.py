import numpy as np
from loguru import logger

from betaproc.errors import DomainError
from betaproc.kernels.domain import OUParams
from betaproc.laws.domain import LimitLaw
from betaproc.laws.repository import chebyshev_union_bound, discretize, weight_distribution
from betaproc.matproc.domain import JacobiMatrix
from betaproc.matproc.repository import scale_by_sqrt_n, wishart_of
from betaproc.spectral.domain import AtomicMeasure, fold
from betaproc.spectral.repository import (
    empirical_eigen_measure,
    matrix_moment,
    singular_value_measure,
    spectral_measure,
    symmetrized_empirical_measure,
    symmetrized_spectral_measure,
    wishart_sqrt_measure,
)
from betaproc.verify.domain import ConvergenceCurve, DistanceReport, VerifyReport
from .distances import bounded_lipschitz_distance, ks_statistic, ks_two_sample, spectral_empirical_gap
from .entry_checks import _check_grid, _replicate_counts
from .sampling import sample_hermite_at, sample_laguerre_at
from .streams import replicate_rng, run_replicates

# experiment kind -> (process, measure of the scaled matrix, limit law)
CONVERGENCE_KINDS = {
    "hermite_spectral": ("hermite", spectral_measure, "semicircle"),
    "hermite_empirical": ("hermite", empirical_eigen_measure, "semicircle"),
    "wishart_spectral": ("wishart", spectral_measure, "mp"),
    "wishart_empirical": ("wishart", empirical_eigen_measure, "mp"),
    "laguerre_singular": ("laguerre", singular_value_measure, "quarter"),
    "wishart_sqrt": ("laguerre", wishart_sqrt_measure, "quarter"),
    "laguerre_symmetrized": ("laguerre", symmetrized_empirical_measure, "symmetrized"),
}
WEIGHT_CHECK_KINDS = ("hermite", "wishart", "symmetrized")
FOLDING_TOLERANCE = 1e-7


def _scaled_sample(process: str, n: int, beta: float, a: float, t: float, rng, clock):
    if process == "hermite":
        return scale_by_sqrt_n(sample_hermite_at(n, beta, t, rng, clock))
    factor = scale_by_sqrt_n(sample_laguerre_at(n, beta, a, t, rng, clock))
    return wishart_of(factor) if process == "wishart" else factor


def limit_law_convergence(kind: str, t: float, beta: float, a: float, n_grid, replicates, seed: int,
                          grid_size: int = 2000, threads: int = 1,
                          clock: OUParams = OUParams()) -> ConvergenceCurve:
    """
    Median bounded-Lipschitz distance between a scaled matrix measure and its limit law.

    Parameters:
    ----------
    kind : str
        A key of CONVERGENCE_KINDS.
    t, beta, a : float
        Time, β and the Laguerre parameter (ignored for hermite kinds).
    n_grid : sequence of int
        Strictly increasing sizes.
    replicates : int or list of int
        Replicates per n.
    seed : int
        Master seed; replicate r at size n uses the stream (seed, n, r).
    grid_size : int
        Number of quantile atoms of the discretized limit law.

    Returns:
    -------
    ConvergenceCurve
        Median and quartiles of the distance per n, with the replicate means
        of the first two moments of the measure in `extras`.
    """
    if kind not in CONVERGENCE_KINDS:
        raise DomainError(f"unknown convergence kind '{kind}', expected one of {tuple(CONVERGENCE_KINDS)}")
    process, measure_of, law_kind = CONVERGENCE_KINDS[kind]
    n_grid = _check_grid(n_grid)
    counts = _replicate_counts(replicates, len(n_grid))
    law = LimitLaw.at_time(law_kind, t, clock)
    target = discretize(law, grid_size)

    def replicate(n):
        def task(rng):
            measure = measure_of(_scaled_sample(process, n, beta, a, t, rng, clock))
            return bounded_lipschitz_distance(measure, target), measure.moment(1), measure.moment(2)
        return task

    medians, q25, q75, first, second = [], [], [], [], []
    for n, count in zip(n_grid, counts):
        results = np.asarray(run_replicates(replicate(n), seed, count, threads, key=(n,)))
        lower, middle, upper = np.percentile(results[:, 0], [25, 50, 75])
        medians.append(float(middle))
        q25.append(float(lower))
        q75.append(float(upper))
        first.append(float(results[:, 1].mean()))
        second.append(float(results[:, 2].mean()))
        logger.debug(f"{kind} n={n}: median bounded-Lipschitz distance {middle:.5f}")
    return ConvergenceCurve("bounded_lipschitz", n_grid, medians, q25, q75, counts, seed,
                            extras={"mean_first_moment": first, "mean_second_moment": second})


def _weight_sum(kind: str, n: int, beta: float, k: int, a: float, t: float, rng, clock) -> float:
    if kind == "hermite":
        measure = spectral_measure(sample_hermite_at(n, beta, t, rng, clock))
    elif kind == "wishart":
        measure = spectral_measure(wishart_of(sample_laguerre_at(n, beta, a, t, rng, clock)))
    else:
        measure = symmetrized_spectral_measure(sample_laguerre_at(n, beta, a, t, rng, clock))
    return float(measure.weights[:k].sum())


def weight_law_check(kind: str, n: int, beta: float, k: int, t: float, replicates: int, seed: int,
                     t_alt: float = None, a: float = 0.0, alpha: float = 0.01, threads: int = 1,
                     clock: OUParams = OUParams()) -> DistanceReport:
    """
    KS of the sampled partial weight sum Σ_{j≤k} μ_j against its Beta law.

    The sum runs over the k largest eigenvalues (the k largest positive
    atoms for 'symmetrized'). The report also holds the sample mean against
    the exact mean within three standard errors and, when `t_alt` is given,
    a two-sample KS between the sums at t and at t_alt. At k = n the law is
    a point mass and the statistic is the largest deviation from it.
    """
    if kind not in WEIGHT_CHECK_KINDS:
        raise DomainError(f"unknown weight check kind '{kind}', expected one of {WEIGHT_CHECK_KINDS}")
    law = weight_distribution(kind, n, beta, k)

    def sums(time, branch):
        return np.asarray(run_replicates(lambda rng: _weight_sum(kind, n, beta, k, a, time, rng, clock),
                                         seed, replicates, threads, key=(branch,)))

    sample = sums(t, 0)
    details = {"kind": kind, "k": k, "beta": beta, "t": t, "law": law.to_dict(),
               "sample_mean": float(sample.mean()), "expected_mean": law.mean}
    if law.kind == "point":
        deviation = float(np.max(np.abs(sample - law.scale)))
        return DistanceReport("ks", deviation, n=n, replicates=replicates, seed=seed,
                              reference=law.scale, passed=deviation < 1e-10, details=details)

    result = ks_statistic(sample, law.cdf)
    standard_error = float(np.sqrt(law.variance / replicates))
    mean_ok = abs(details["sample_mean"] - law.mean) <= 3.0 * standard_error
    passed = bool(result.pvalue > alpha) and mean_ok
    details.update({"standard_error": standard_error, "mean_within_3se": bool(mean_ok)})
    if t_alt is not None:
        shifted = ks_two_sample(sample, sums(t_alt, 1))
        details.update({"t_alt": t_alt, "two_sample_statistic": float(shifted.statistic),
                        "two_sample_p_value": float(shifted.pvalue)})
        passed = passed and bool(shifted.pvalue > alpha)
    return DistanceReport("ks", float(result.statistic), n=n, replicates=replicates, seed=seed,
                          p_value=float(result.pvalue), passed=passed, details=details)


def spectral_empirical_closeness(kind: str, n: int, beta: float, t: float, epsilon: float, replicates: int,
                                 seed: int, a: float = 0.0, threads: int = 1,
                                 clock: OUParams = OUParams()) -> DistanceReport:
    """
    Measured P(max_k |Σ_{j≤k} μ_j - k/n| > ε) against the union bound from exact fourth moments.

    Passes when the measured probability does not exceed the bound.
    """
    if kind not in ("hermite", "wishart"):
        raise DomainError(f"closeness is defined for 'hermite' and 'wishart', got '{kind}'")
    if not epsilon > 0:
        raise DomainError(f"epsilon must be positive, got {epsilon}")

    def gap(rng):
        if kind == "hermite":
            return spectral_empirical_gap(sample_hermite_at(n, beta, t, rng, clock))
        return spectral_empirical_gap(wishart_of(sample_laguerre_at(n, beta, a, t, rng, clock)))

    gaps = np.asarray(run_replicates(gap, seed, replicates, threads))
    measured = float(np.mean(gaps > epsilon))
    bound = chebyshev_union_bound(n, beta, epsilon, kind)
    return DistanceReport("exceedance", measured, n=n, replicates=replicates, seed=seed, reference=bound,
                          passed=measured <= bound,
                          details={"kind": kind, "epsilon": epsilon, "t": t,
                                   "median_gap": float(np.median(gaps)), "max_gap": float(gaps.max())})


def _random_jacobi(rng: np.random.Generator, n_max: int) -> JacobiMatrix:
    n = int(rng.integers(1, n_max + 1))
    return JacobiMatrix(rng.normal(size=n), np.abs(rng.normal(size=n - 1)) + 0.1)


def moment_identity_check(n_max: int = 8, k_max: int = 6, matrices: int = 100, seed: int = 0,
                          tolerance: float = 1e-9) -> VerifyReport:
    """∫ x^k dμ_J against (e₁, J^k e₁) on random generic Jacobi matrices of size ≤ n_max."""
    rng = replicate_rng(seed, 0)
    samples = [_random_jacobi(rng, n_max) for _ in range(matrices)]
    measures = [spectral_measure(J) for J in samples]
    report = VerifyReport("moment-identity", details={"n_max": n_max, "matrices": matrices, "seed": seed})
    for k in range(1, k_max + 1):
        errors = [abs(mu.moment(k) - matrix_moment(J, k)) / max(1.0, abs(matrix_moment(J, k)))
                  for J, mu in zip(samples, measures)]
        worst = float(max(errors))
        report.add(f"moment_{k}", "max_relative_error", worst, 0.0, tolerance, worst <= tolerance)
    return report


def _random_even_measure(rng: np.random.Generator, atoms: int) -> AtomicMeasure:
    positive = rng.uniform(0.05, 2.0, size=atoms)
    weights = rng.dirichlet(np.ones(atoms)) / 2.0
    return AtomicMeasure(np.concatenate([positive, -positive]), np.concatenate([weights, weights]))


def folding_check(instances: int = 20, seed: int = 0, atoms: int = 6) -> VerifyReport:
    """
    Bounded-Lipschitz distance of folded even measures never exceeds the unfolded one.

    Each instance draws two even atomic measures; the check holds up to the
    LP solver tolerance.
    """
    report = VerifyReport("folding", details={"instances": instances, "seed": seed, "atoms": atoms})
    folded, unfolded = [], []
    for index in range(instances):
        rng = replicate_rng(seed, index)
        mu, nu = _random_even_measure(rng, atoms), _random_even_measure(rng, atoms)
        unfolded.append(bounded_lipschitz_distance(mu, nu))
        folded.append(bounded_lipschitz_distance(fold(mu), fold(nu)))
    excess = float(max(f - u for f, u in zip(folded, unfolded)))
    report.add("folded_minus_unfolded", "max", max(excess, 0.0), 0.0, FOLDING_TOLERANCE,
               excess <= FOLDING_TOLERANCE)
    report.details.update({"folded": folded, "unfolded": unfolded})
    return report
