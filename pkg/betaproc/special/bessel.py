import numpy as np
from scipy import special as sp

from betaproc.errors import DomainError, SpecialFunctionOverflow
from .gamma import _scalar_or_array


def _check_arguments(nu, z):
    nu = np.asarray(nu, dtype=float)
    z = np.asarray(z, dtype=float)
    if np.any(~(nu > -1)):
        raise DomainError(f"Bessel order must exceed -1, got {nu}")
    if np.any(~(z >= 0)):
        raise DomainError(f"Bessel argument must be nonnegative, got {z}")
    return nu, z


def bessel_i(nu, z):
    """
    Modified Bessel function of the first kind I_ν(z).

    Orders in (-1, 0) are accepted: they arise as ν = δ/2 - 1 for Bessel
    dimensions δ < 2. Use `bessel_ive` or `log_bessel_i` for large z.

    Raises:
    -------
    SpecialFunctionOverflow
        If I_ν(z) exceeds the double precision range.
    """
    nu, z = _check_arguments(nu, z)
    with np.errstate(over="ignore"):
        values = sp.iv(nu, z)
    if np.any(np.isinf(values) & (z > 0)):
        raise SpecialFunctionOverflow(
            f"I_nu(z) overflows for nu={nu}, z={z}; use bessel_ive or log_bessel_i"
        )
    return _scalar_or_array(values)


def bessel_ive(nu, z):
    """Exponentially scaled form e^{-z} I_ν(z)."""
    nu, z = _check_arguments(nu, z)
    return _scalar_or_array(sp.ive(nu, z))


def log_bessel_i(nu, z):
    """ln I_ν(z), finite wherever the scaled form is positive."""
    nu, z = _check_arguments(nu, z)
    with np.errstate(divide="ignore"):
        values = np.log(sp.ive(nu, z)) + z
    return _scalar_or_array(values)


def bessel_i_series(nu, z, terms: int = 200):
    """
    Partial sum of the power series Σ_k (z/2)^{2k+ν} / (k! Γ(k+ν+1)).

    Summed in log space; an independent check on `bessel_i` for moderate z.
    """
    nu, z = _check_arguments(nu, z)
    k = np.arange(terms).reshape((-1,) + (1,) * z.ndim)
    log_terms = sp.xlogy(2 * k + nu, z / 2.0) - sp.gammaln(k + 1) - sp.gammaln(k + nu + 1)
    return _scalar_or_array(np.exp(sp.logsumexp(log_terms, axis=0)))
