import numpy as np

from betaproc.errors import BranchCutError, DomainError
from betaproc.special import integrate_quad


def _check_off_support(z, rho_value: float) -> np.ndarray:
    if not rho_value > 0:
        raise DomainError(f"rho must be positive, got {rho_value}")
    z = np.asarray(z, dtype=complex)
    on_cut = (z.imag == 0) & (z.real >= 0) & (z.real <= 4.0 * rho_value)
    if np.any(on_cut):
        raise BranchCutError(f"z={z} lies on the cut [0, {4.0 * rho_value}]; the branch is ambiguous there")
    return z


def _root(z: np.ndarray, rho_value: float) -> np.ndarray:
    # √z √(z - 4ρ) with principal roots: the branch that is positive on (4ρ, ∞)
    return np.sqrt(z) * np.sqrt(z - 4.0 * rho_value)


def _out(values):
    return complex(values) if np.ndim(values) == 0 else values


def stieltjes_mp(z, rho_value: float):
    """
    Stieltjes transform ∫ dμ(x)/(z - x) of the Marchenko-Pastur law with parameter ρ.

    Closed form 1 / (z/2 + ½ √z √(z - 4ρ)).

    Raises:
    -------
    BranchCutError
        For real z in [0, 4ρ].
    """
    z = _check_off_support(z, rho_value)
    return _out(1.0 / (0.5 * z + 0.5 * _root(z, rho_value)))


def stieltjes_mp_f(z, rho_value: float):
    """
    Tail F(z) of the continued fraction, the root of F = ρ²/(z - 2ρ - F) vanishing at infinity.

    The transform is 1 / (z - ρ - F(z)).
    """
    z = _check_off_support(z, rho_value)
    return _out(0.5 * (z - 2.0 * rho_value - _root(z, rho_value)))


def stieltjes_mp_continued_fraction(z, rho_value: float, levels: int = 200):
    """Backward evaluation of 1/(z - ρ - ρ²/(z - 2ρ - ρ²/(z - 2ρ - ...))) with `levels` levels."""
    z = _check_off_support(z, rho_value)
    tail = np.zeros_like(z)
    for _ in range(levels):
        tail = rho_value ** 2 / (z - 2.0 * rho_value - tail)
    return _out(1.0 / (z - rho_value - tail))


def stieltjes_inversion(x, rho_value: float, eps: float = 1e-6):
    """Density estimate -Im Q(x + iε)/π, the Stieltjes inversion formula."""
    values = -np.imag(stieltjes_mp(np.asarray(x, dtype=float) + 1j * eps, rho_value)) / np.pi
    return float(values) if np.ndim(values) == 0 else values


def stieltjes_by_quadrature(z: float, rho_value: float) -> float:
    """∫ dμ(x)/(z - x) for real z outside [0, 4ρ], by quadrature of the density."""
    if 0 <= z <= 4.0 * rho_value:
        raise BranchCutError(f"z={z} lies in the support [0, {4.0 * rho_value}]")
    return integrate_quad(lambda x: 1.0 / ((z - x) * 2.0 * np.pi * rho_value), 0.0, 4.0 * rho_value,
                          epsabs=1e-14, epsrel=1e-12, weight="alg", wvar=(-0.5, 0.5))
