import numpy as np

from betaproc.errors import DomainError
from betaproc.kernels.domain import BesselParams, OUParams
from betaproc.kernels.repository import bessel_sample_step, bessel_transition_cdf, ou_sample_step
from betaproc.laws.domain import EigenJpdfParams
from betaproc.laws.repository import eigen_jpdf_total_mass, eigen_max_cdf
from betaproc.matproc.repository import wishart_of
from betaproc.spectral.repository import tridiagonal_eigenvalues
from betaproc.verify.domain import DistanceReport, VerifyReport
from .distances import ks_statistic, ks_two_sample
from .sampling import sample_hermite_at, sample_laguerre_at
from .streams import replicate_rng, run_replicates


def bessel_exactness_check(delta: float, t: float, samples: int, seed: int, alpha: float = 0.01,
                           clock: OUParams = OUParams()) -> DistanceReport:
    """KS of `samples` exact Bessel draws from 0 against the closed-form CDF at time t."""
    params = BesselParams(delta, clock.a, clock.sigma)
    draws = bessel_sample_step(np.zeros(samples), t, params, replicate_rng(seed, 0))
    result = ks_statistic(draws, lambda x: bessel_transition_cdf(t, 0.0, x, params))
    return DistanceReport("ks", float(result.statistic), n=1, replicates=samples, seed=seed,
                          p_value=float(result.pvalue), passed=bool(result.pvalue > alpha),
                          details={"delta": delta, "t": t})


def chapman_kolmogorov_check(kind: str, x0: float, first: float, second: float, samples: int, seed: int,
                             delta: float = 2.0, alpha: float = 0.01,
                             clock: OUParams = OUParams()) -> DistanceReport:
    """
    Two-sample KS between two consecutive steps and one combined step.

    The two populations come from distinct streams of the same seed.
    """
    if kind == "ou":
        def step(values, dt, rng):
            return ou_sample_step(values, dt, clock, rng)
    elif kind == "bessel":
        params = BesselParams(delta, clock.a, clock.sigma)

        def step(values, dt, rng):
            return bessel_sample_step(values, dt, params, rng)
    else:
        raise DomainError(f"unknown kernel kind '{kind}'")
    start = np.full(samples, float(x0))
    rng = replicate_rng(seed, 0)
    two_steps = step(step(start, first, rng), second, rng)
    one_step = step(start, first + second, replicate_rng(seed, 1))
    result = ks_two_sample(two_steps, one_step)
    return DistanceReport("ks", float(result.statistic), n=1, replicates=samples, seed=seed,
                          p_value=float(result.pvalue), passed=bool(result.pvalue > alpha),
                          details={"kind": kind, "x0": x0, "steps": [first, second]})


def eigen_jpdf_check(kind: str, beta: float, t: float, replicates: int, seed: int, a: float = 0.0,
                     alpha: float = 0.01, threads: int = 1, clock: OUParams = OUParams()) -> VerifyReport:
    """
    Audits the eigenvalue densities at n = 1 and n = 2.

    Checks the total mass of the primary form by quadrature, reports the
    mass of the printed Wishart form without asserting it, and tests the
    largest eigenvalue of simulated 2 × 2 matrices against the distribution
    function integrated from the density.
    """
    report = VerifyReport(f"eigen-jpdf:{kind}")
    for n in (1, 2):
        params = EigenJpdfParams(kind, n, beta, t, a if kind == "wishart" else None, clock)
        mass = eigen_jpdf_total_mass(params)
        report.add(f"total_mass_n{n}", "integral", mass, 1.0, 1e-3, abs(mass - 1.0) <= 1e-3)
        if kind == "wishart":
            printed = eigen_jpdf_total_mass(params, verbatim=True)
            report.add(f"printed_form_total_mass_n{n}", "integral", printed, 1.0)

    def largest(rng):
        if kind == "hermite":
            return tridiagonal_eigenvalues(sample_hermite_at(2, beta, t, rng, clock))[0]
        return tridiagonal_eigenvalues(wishart_of(sample_laguerre_at(2, beta, a, t, rng, clock)))[0]

    sample = np.asarray(run_replicates(largest, seed, replicates, threads))
    params = EigenJpdfParams(kind, 2, beta, t, a if kind == "wishart" else None, clock)
    grid = np.linspace(sample.min(), sample.max(), 80)
    values = eigen_max_cdf(params, grid)
    result = ks_statistic(sample, lambda x: np.interp(x, grid, values, left=values[0], right=1.0))
    report.add("largest_eigenvalue_ks", "ks_pvalue", result.pvalue, alpha, None, result.pvalue > alpha)
    return report
