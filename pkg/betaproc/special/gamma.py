import numpy as np
from scipy import special as sp

from betaproc.errors import DomainError


def _scalar_or_array(values: np.ndarray):
    return float(values) if np.ndim(values) == 0 else values


def log_gamma(x):
    """
    Natural logarithm of the Gamma function.

    Parameters:
    ----------
    x : float or array_like
        Strictly positive argument(s).

    Returns:
    -------
    float or np.ndarray
        ln Γ(x).
    """
    x = np.asarray(x, dtype=float)
    if np.any(~(x > 0)):
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    return _scalar_or_array(sp.gammaln(x))


def log_beta(a, b):
    """ln B(a, b) for a, b > 0."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if np.any(~(a > 0)) or np.any(~(b > 0)):
        raise DomainError(f"log_beta requires positive arguments, got a={a}, b={b}")
    return _scalar_or_array(sp.betaln(a, b))


def beta_function(a, b):
    return _scalar_or_array(np.exp(log_beta(a, b)))
