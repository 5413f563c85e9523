import numpy as np

from betaproc.errors import DomainError


def laguerre_table(n_max: int, alpha: float, x) -> np.ndarray:
    """
    Generalized Laguerre polynomials L_0^α(x), ..., L_{n_max}^α(x).

    Uses the three-term recurrence
    (k+1) L_{k+1} = (2k+1+α-x) L_k - (k+α) L_{k-1}.

    Returns:
    -------
    np.ndarray
        Array of shape (n_max + 1,) + shape(x).
    """
    if n_max < 0 or int(n_max) != n_max:
        raise DomainError(f"Laguerre degree must be a nonnegative integer, got {n_max}")
    if not alpha > -1:
        raise DomainError(f"Laguerre parameter must exceed -1, got {alpha}")
    x = np.asarray(x, dtype=float)
    table = np.empty((int(n_max) + 1,) + x.shape)
    table[0] = 1.0
    if n_max >= 1:
        table[1] = 1.0 + alpha - x
    for k in range(1, int(n_max)):
        table[k + 1] = ((2 * k + 1 + alpha - x) * table[k] - (k + alpha) * table[k - 1]) / (k + 1)
    return table


def laguerre_poly(n: int, alpha: float, x):
    """L_n^α(x); exact for n = 0 and n = 1."""
    values = laguerre_table(n, alpha, x)[-1]
    return float(values) if np.ndim(values) == 0 else values
