import numpy as np
from loguru import logger
from scipy import sparse, stats
from scipy.optimize import linprog

from betaproc.errors import ConvergenceError, DomainError, MeasureMismatchError, SizeLimitError
from betaproc.matproc.domain import JacobiMatrix
from betaproc.spectral.domain import AtomicMeasure, EmpiricalMeasure
from betaproc.spectral.repository import spectral_measure

MAX_LP_ATOMS = 100_000


def ks_statistic(sample, cdf):
    """
    One-sample Kolmogorov-Smirnov test of `sample` against `cdf`.

    Returns:
    -------
    scipy.stats KstestResult
        `statistic` is the sup-norm deviation of the empirical CDF,
        `pvalue` the asymptotic Kolmogorov p-value.
    """
    sample = np.asarray(sample, dtype=float).reshape(-1)
    if sample.size == 0:
        raise DomainError("the KS statistic needs a nonempty sample")
    return stats.kstest(sample, cdf, method="asymp")


def ks_two_sample(first, second):
    """Two-sample KS test with the asymptotic p-value."""
    return stats.ks_2samp(np.asarray(first, dtype=float), np.asarray(second, dtype=float), method="asymp")


def sup_cdf_distance(mu: AtomicMeasure, nu: AtomicMeasure) -> float:
    """
    sup_x |F_μ(x) - F_ν(x)| for two measures on the same atoms.

    With common atoms the supremum is max_k |Σ_{j≤k} μ_j - Σ_{j≤k} ν_j|.

    Raises:
    -------
    MeasureMismatchError
        If the atom sets differ.
    """
    first = np.argsort(mu.points, kind="stable")
    second = np.argsort(nu.points, kind="stable")
    scale = max(1.0, float(np.max(np.abs(mu.points))) if mu.size else 1.0)
    if mu.size != nu.size or not np.allclose(mu.points[first], nu.points[second], rtol=0, atol=1e-12 * scale):
        raise MeasureMismatchError("sup_cdf_distance needs two measures on the same atoms")
    gap = np.cumsum(mu.weights[first]) - np.cumsum(nu.weights[second])
    return float(np.max(np.abs(gap)))


def spectral_empirical_gap(J: JacobiMatrix) -> float:
    """max_k |Σ_{j≤k} μ_j - k/n| between the spectral and eigenvalue measures of J."""
    mu = spectral_measure(J)
    return sup_cdf_distance(mu, EmpiricalMeasure.from_points(mu.points))


def bounded_lipschitz_distance(mu: AtomicMeasure, nu: AtomicMeasure, max_atoms: int = MAX_LP_ATOMS) -> float:
    """
    sup { ∫ f dμ - ∫ f dν : ‖f‖_L + ‖f‖_∞ ≤ 1 } for atomic measures.

    The test function only matters on the union of atoms z_1 < ... < z_m,
    where it can be any vector with |f_{i+1} - f_i| ≤ L (z_{i+1} - z_i),
    |f_i| ≤ s and L + s ≤ 1; piecewise-linear interpolation extends it with
    the same norms. The resulting linear program is solved with HiGHS.

    Raises:
    -------
    SizeLimitError
        Above `max_atoms` distinct atoms.
    ConvergenceError
        If the solver does not report an optimum.
    """
    points = np.concatenate([mu.points, nu.points])
    union, inverse = np.unique(points, return_inverse=True)
    inverse = inverse.reshape(-1)
    m = union.size
    if m > max_atoms:
        raise SizeLimitError(f"bounded-Lipschitz LP accepts at most {max_atoms} atoms, got {m}")
    net = (np.bincount(inverse[:mu.size], weights=mu.weights, minlength=m)
           - np.bincount(inverse[mu.size:], weights=nu.weights, minlength=m))
    if m == 1:
        return float(abs(net[0]))

    gaps = np.diff(union)
    lipschitz, bound = m, m + 1
    steps = np.arange(m - 1)
    atoms = np.arange(m)
    rows = np.concatenate([
        steps, steps, steps,
        m - 1 + steps, m - 1 + steps, m - 1 + steps,
        2 * (m - 1) + atoms, 2 * (m - 1) + atoms,
        3 * m - 2 + atoms, 3 * m - 2 + atoms,
        [4 * m - 2, 4 * m - 2],
    ])
    cols = np.concatenate([
        steps + 1, steps, np.full(m - 1, lipschitz),
        steps, steps + 1, np.full(m - 1, lipschitz),
        atoms, np.full(m, bound),
        atoms, np.full(m, bound),
        [lipschitz, bound],
    ])
    data = np.concatenate([
        np.ones(m - 1), -np.ones(m - 1), -gaps,
        np.ones(m - 1), -np.ones(m - 1), -gaps,
        np.ones(m), -np.ones(m),
        -np.ones(m), -np.ones(m),
        [1.0, 1.0],
    ])
    constraints = sparse.csr_matrix((data, (rows, cols)), shape=(4 * m - 1, m + 2))
    limits = np.zeros(4 * m - 1)
    limits[-1] = 1.0
    objective = np.concatenate([-net, [0.0, 0.0]])
    bounds = [(None, None)] * m + [(0, None), (0, None)]
    result = linprog(objective, A_ub=constraints, b_ub=limits, bounds=bounds, method="highs")
    if result.status != 0:
        raise ConvergenceError(f"bounded-Lipschitz LP failed on {m} atoms: {result.message}")
    logger.debug(f"bounded-Lipschitz LP on {m} atoms: {-result.fun}")
    return float(min(max(-result.fun, 0.0), 2.0))
