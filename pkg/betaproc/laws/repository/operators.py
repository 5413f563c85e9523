import numpy as np
from scipy import special as sp

from betaproc.errors import DomainError
from betaproc.kernels.domain import OUParams, rho
from betaproc.matproc.domain import JacobiMatrix

OPERATOR_KINDS = ("hermite", "wishart", "symmetrized")


def chebyshev_polys(n: int, t: float, x, clock: OUParams = OUParams()):
    """
    P^t_n(x) = sin(nθ)/sin θ with x = √(2ρ(t)) cos θ.

    These are U_{n-1}(x/√(2ρ)), orthonormal for n ≥ 1 against the
    semicircle law of parameter ρ(t). P^t_0 vanishes identically.

    Raises:
    -------
    DomainError
        For |x| > √(2ρ(t)).
    """
    if int(n) != n or n < 0:
        raise DomainError(f"degree must be a nonnegative integer, got {n}")
    radius = np.sqrt(2.0 * rho(t, clock))
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > radius * (1.0 + 1e-12)):
        raise DomainError(f"x must lie in [-{radius}, {radius}], got {x}")
    if n == 0:
        values = np.zeros_like(x)
    else:
        values = sp.eval_chebyu(n - 1, np.clip(x / radius, -1.0, 1.0))
    return float(values) if values.ndim == 0 else values


def mp_orthogonal_poly(n: int, x, rho_value: float):
    """
    Monic orthogonal polynomials of the Marchenko-Pastur law with parameter ρ.

    P_0 = 1, P_1 = x - ρ, P_{k+1} = (x - 2ρ) P_k - ρ² P_{k-1}; the squared
    norm of P_k is ρ^{2k}.
    """
    if int(n) != n or n < 0:
        raise DomainError(f"degree must be a nonnegative integer, got {n}")
    x = np.asarray(x, dtype=float)
    previous, current = np.ones_like(x), x - rho_value
    if n == 0:
        current = previous
    for _ in range(1, int(n)):
        previous, current = current, (x - 2.0 * rho_value) * current - rho_value ** 2 * previous
    return float(current) if current.ndim == 0 else current


def limiting_operator(kind: str, rho_value: float, m: int) -> JacobiMatrix:
    """
    m × m truncation of a limiting Jacobi operator.

    'hermite': zero diagonal, off-diagonal √(ρ/2) (semicircle on ±√(2ρ));
    'wishart': diagonal (ρ, 2ρ, 2ρ, ...), off-diagonal ρ (Marchenko-Pastur);
    'symmetrized': zero diagonal, off-diagonal √ρ (semicircle on ±2√ρ).
    """
    if int(m) != m or m < 1:
        raise DomainError(f"truncation size must be a positive integer, got {m}")
    if not rho_value > 0:
        raise DomainError(f"rho must be positive, got {rho_value}")
    if kind == "hermite":
        return JacobiMatrix(np.zeros(m), np.full(m - 1, np.sqrt(rho_value / 2.0)))
    if kind == "wishart":
        diag = np.full(m, 2.0 * rho_value)
        diag[0] = rho_value
        return JacobiMatrix(diag, np.full(m - 1, rho_value))
    if kind == "symmetrized":
        return JacobiMatrix(np.zeros(m), np.full(m - 1, np.sqrt(rho_value)))
    raise DomainError(f"unknown operator kind '{kind}', expected one of {OPERATOR_KINDS}")
