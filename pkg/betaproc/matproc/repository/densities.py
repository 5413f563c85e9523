import numpy as np
from scipy import stats

from betaproc.errors import DomainError
from betaproc.kernels.domain import BesselParams, OUParams, rho
from betaproc.kernels.repository import bessel_transition_log_density, ou_transition_log_density
from betaproc.matproc.domain import BidiagonalMatrix, JacobiMatrix


def _check(t: float, size: int, n: int):
    if not t > 0:
        raise DomainError(f"t must be positive, got {t}")
    if size != n:
        raise DomainError(f"matrix has size {size}, expected n={n}")


def _descending(n: int) -> np.ndarray:
    return np.arange(n - 1, 0, -1, dtype=float)


def hermite_entry_density(t: float, J: JacobiMatrix, n: int, beta: float,
                          clock: OUParams = OUParams()) -> float:
    """
    Log joint density of the entries of J_β(t) started from 0.

    The entries are independent: a_i ~ N(0, ρ(t)/β) and
    b_j ~ √(ρ(t)/2β) χ_{(n-j)β}. t = inf gives the stationary ensemble.

    Returns:
    -------
    float
        The log-density, -inf when some b_j ≤ 0.
    """
    _check(t, J.n, n)
    if np.any(J.offdiag <= 0):
        return -np.inf
    variance = rho(t, clock)
    value = stats.norm.logpdf(J.diag, scale=np.sqrt(variance / beta)).sum()
    value += stats.chi.logpdf(J.offdiag, beta * _descending(n), scale=np.sqrt(variance / (2.0 * beta))).sum()
    return float(value)


def laguerre_entry_density(t: float, L: BidiagonalMatrix, n: int, beta: float, a: float,
                           clock: OUParams = OUParams()) -> float:
    """
    Log joint density of the entries of L_{β,a}(t) started from 0.

    x_i ~ √(ρ(t)/β) χ_{(a+n-i+1)β} and y_i ~ √(ρ(t)/β) χ_{(n-i)β}, independent.
    Returns -inf when some entry is nonpositive.
    """
    _check(t, L.n, n)
    if not a > -1:
        raise DomainError(f"Laguerre parameter must satisfy a > -1, got a={a}")
    if np.any(L.diag <= 0) or np.any(L.superdiag <= 0):
        return -np.inf
    scale = np.sqrt(rho(t, clock) / beta)
    value = stats.chi.logpdf(L.diag, beta * (a + np.arange(n, 0, -1, dtype=float)), scale=scale).sum()
    value += stats.chi.logpdf(L.superdiag, beta * _descending(n), scale=scale).sum()
    return float(value)


def _bessel_sum(t: float, start: np.ndarray, end: np.ndarray, dimensions: np.ndarray,
                clock: OUParams) -> float:
    total = 0.0
    for x0, x, delta in zip(start, end, dimensions):
        total += bessel_transition_log_density(t, x0, x, BesselParams(delta, clock.a, clock.sigma))
    return total


def hermite_transition_log_density(t: float, J0: JacobiMatrix, J: JacobiMatrix, beta: float,
                                   clock: OUParams = OUParams()) -> float:
    """
    Log transition density of the β-Hermite process from J0 to J over time t.

    The product of the per-entry OU and Bessel kernels in the coordinates
    √β a_i and √(2β) b_j, times the Jacobian β^{n/2} (2β)^{(n-1)/2}.
    """
    n = J0.n
    _check(t, J.n, n)
    if np.any(J.offdiag <= 0):
        return -np.inf
    root, root2 = np.sqrt(beta), np.sqrt(2.0 * beta)
    value = np.sum(ou_transition_log_density(t, root * J0.diag, root * J.diag, clock))
    value += _bessel_sum(t, root2 * J0.offdiag, root2 * J.offdiag, beta * _descending(n), clock)
    return float(value + hermite_transition_log_prefactor(n, beta))


def hermite_transition_log_prefactor(n: int, beta: float, form: str = "product") -> float:
    """
    Log of the constant in front of the per-entry kernels.

    'product' is the Jacobian of the entry scaling, 2^{(n-1)/2} β^{n-1/2},
    which makes the density integrate to one. 'paper' is the constant
    2^{n/2} β^{n-1/2} printed with the closed form; it is larger by √2.
    """
    if form == "product":
        return 0.5 * (n - 1) * np.log(2.0) + (n - 0.5) * np.log(beta)
    if form == "paper":
        return 0.5 * n * np.log(2.0) + (n - 0.5) * np.log(beta)
    raise DomainError(f"unknown prefactor form '{form}'")


def laguerre_transition_log_density(t: float, L0: BidiagonalMatrix, L: BidiagonalMatrix, beta: float,
                                    a: float, clock: OUParams = OUParams()) -> float:
    """Log transition density of the β-Laguerre process, Jacobian β^{n-1/2}."""
    n = L0.n
    _check(t, L.n, n)
    if np.any(L.diag <= 0) or np.any(L.superdiag <= 0):
        return -np.inf
    root = np.sqrt(beta)
    value = _bessel_sum(t, root * L0.diag, root * L.diag, beta * (a + np.arange(n, 0, -1, dtype=float)), clock)
    value += _bessel_sum(t, root * L0.superdiag, root * L.superdiag, beta * _descending(n), clock)
    return float(value + (n - 0.5) * np.log(beta))
