from typing import List, Union

import numpy as np
from loguru import logger
from scipy import stats

from betaproc.errors import DomainError
from betaproc.kernels.domain import OUParams, rho
from betaproc.matproc.repository import scale_by_sqrt_n, wishart_of
from betaproc.verify.domain import ConvergenceCurve, DistanceReport
from .distances import ks_statistic
from .sampling import sample_hermite_at, sample_laguerre_at
from .streams import run_replicates

ENTRY_KINDS = ("hermite_diag", "hermite_offdiag", "laguerre_diag", "laguerre_superdiag",
               "wishart_diag", "wishart_offdiag")
_ALIASES = {"hermite": "hermite_diag", "laguerre": "laguerre_diag", "wishart": "wishart_diag"}


def _replicate_counts(replicates: Union[int, List[int]], size: int) -> List[int]:
    if isinstance(replicates, (int, np.integer)):
        return [int(replicates)] * size
    counts = [int(count) for count in replicates]
    if len(counts) != size:
        raise DomainError(f"need one replicate count per n, got {len(counts)} for {size} sizes")
    return counts


def _check_grid(n_grid) -> List[int]:
    n_grid = [int(n) for n in n_grid]
    if not n_grid or any(b <= a for a, b in zip(n_grid, n_grid[1:])):
        raise DomainError(f"n-grid must be nonempty and strictly increasing, got {n_grid}")
    return n_grid


def entry_limit(kind: str, k: int, rho_value: float) -> float:
    """
    In-probability limit of the k-th scaled entry.

    Hermite: a_k/√n → 0, b_k/√n → √(ρ/2). Laguerre: x_k/√n, y_k/√n → √ρ.
    Wishart (J/n): diagonal → ρ for k = 1 and 2ρ for k > 1, off-diagonal → ρ.
    """
    kind = _ALIASES.get(kind, kind)
    limits = {
        "hermite_diag": 0.0,
        "hermite_offdiag": np.sqrt(rho_value / 2.0),
        "laguerre_diag": np.sqrt(rho_value),
        "laguerre_superdiag": np.sqrt(rho_value),
        "wishart_diag": rho_value if k == 1 else 2.0 * rho_value,
        "wishart_offdiag": rho_value,
    }
    if kind not in limits:
        raise DomainError(f"unknown entry kind '{kind}', expected one of {ENTRY_KINDS}")
    return float(limits[kind])


def _scaled_entry(kind: str, k: int, n: int, beta: float, a: float, t: float, rng, clock) -> float:
    family, row = kind.split("_")
    if family == "hermite":
        matrix = scale_by_sqrt_n(sample_hermite_at(n, beta, t, rng, clock))
    else:
        matrix = scale_by_sqrt_n(sample_laguerre_at(n, beta, a, t, rng, clock))
        if family == "wishart":
            matrix = wishart_of(matrix)
    values = matrix.diag if row == "diag" else (matrix.offdiag if family != "laguerre" else matrix.superdiag)
    return float(values[k - 1])


def scaled_entry_convergence(kind: str, k: int, t: float, beta: float, a: float, n_grid,
                             replicates: Union[int, List[int]], seed: int, epsilon: float = 0.05,
                             threads: int = 1, clock: OUParams = OUParams()) -> ConvergenceCurve:
    """
    Monte Carlo estimate of P(|entry_k - limit| > ε) along an n-grid.

    Parameters:
    ----------
    kind : str
        One of ENTRY_KINDS; 'hermite', 'laguerre' and 'wishart' mean the diagonal.
    k : int
        1-based entry index, at most n (n - 1 off the diagonal) for the smallest n.
    t, beta, a : float
        Time, β and the Laguerre parameter (ignored for hermite).
    n_grid : sequence of int
        Strictly increasing sizes.
    replicates : int or list of int
        Replicates per n.
    seed : int
        Master seed; replicate r at size n uses the stream (seed, n, r).
    epsilon : float
        Exceedance threshold.

    Returns:
    -------
    ConvergenceCurve
        `values` are the exceedance probabilities; medians and quartiles
        are those of |entry_k - limit|.
    """
    kind = _ALIASES.get(kind, kind)
    n_grid = _check_grid(n_grid)
    counts = _replicate_counts(replicates, len(n_grid))
    row_limit = n_grid[0] - (0 if kind.endswith("_diag") else 1)
    if not 1 <= k <= row_limit:
        raise DomainError(f"entry index k={k} out of range for n={n_grid[0]}")
    limit = entry_limit(kind, k, rho(t, clock))
    medians, q25, q75, exceedance, means = [], [], [], [], []
    for n, count in zip(n_grid, counts):
        entries = np.asarray(run_replicates(
            lambda rng: _scaled_entry(kind, k, n, beta, a, t, rng, clock), seed, count, threads, key=(n,)))
        deviation = np.abs(entries - limit)
        lower, middle, upper = np.percentile(deviation, [25, 50, 75])
        medians.append(float(middle))
        q25.append(float(lower))
        q75.append(float(upper))
        exceedance.append(float(np.mean(deviation > epsilon)))
        means.append(float(entries.mean()))
        logger.debug(f"{kind} k={k} n={n}: exceedance {exceedance[-1]:.4f}")
    return ConvergenceCurve("exceedance", n_grid, medians, q25, q75, counts, seed,
                            values=exceedance, extras={"mean_entry": means, "limit": [limit] * len(n_grid)})


def _entry_references(kind: str, n: int, beta: float, a: float, variance: float) -> list:
    if kind == "hermite":
        diag = [stats.norm(scale=np.sqrt(variance / beta))] * n
        rest = [stats.chi(beta * (n - j), scale=np.sqrt(variance / (2.0 * beta))) for j in range(1, n)]
        return diag + rest
    scale = np.sqrt(variance / beta)
    diag = [stats.chi(beta * (a + n - i + 1), scale=scale) for i in range(1, n + 1)]
    rest = [stats.chi(beta * (n - i), scale=scale) for i in range(1, n)]
    return diag + rest


def entry_law_check(kind: str, n: int, beta: float, t: float, replicates: int, seed: int, a: float = 0.0,
                    alpha: float = 0.01, threads: int = 1, clock: OUParams = OUParams()) -> DistanceReport:
    """
    Per-entry KS of the process at time t against the √ρ(t)-scaled stationary laws.

    All 2n - 1 entries are tested; the report passes when the smallest
    p-value exceeds α/(2n - 1). The largest absolute correlation between
    two distinct entries is reported in `details`.
    """
    if kind not in ("hermite", "laguerre"):
        raise DomainError(f"entry laws are defined for 'hermite' and 'laguerre', got '{kind}'")

    def entries(rng):
        if kind == "hermite":
            matrix = sample_hermite_at(n, beta, t, rng, clock)
            return np.concatenate([matrix.diag, matrix.offdiag])
        matrix = sample_laguerre_at(n, beta, a, t, rng, clock)
        return np.concatenate([matrix.diag, matrix.superdiag])

    sample = np.asarray(run_replicates(entries, seed, replicates, threads))
    references = _entry_references(kind, n, beta, a, rho(t, clock))
    results = [ks_statistic(sample[:, column], law.cdf) for column, law in enumerate(references)]
    p_values = [float(result.pvalue) for result in results]
    correlation = 0.0
    if sample.shape[1] > 1:
        matrix = np.corrcoef(sample, rowvar=False)
        correlation = float(np.max(np.abs(matrix[~np.eye(matrix.shape[0], dtype=bool)])))
    count = len(references)
    return DistanceReport(
        "ks", float(max(result.statistic for result in results)), n=n, replicates=replicates, seed=seed,
        p_value=min(p_values), passed=bool(min(p_values) > alpha / count),
        details={"kind": kind, "t": t, "beta": beta, "p_values": p_values, "max_abs_correlation": correlation},
    )
