import numpy as np

from betaproc.matproc.domain import BidiagonalMatrix, JacobiMatrix
from betaproc.matproc.repository import symmetrize
from betaproc.spectral.domain import EmpiricalMeasure, SpectralMeasure
from .eigen import eigen_tridiagonal, tridiagonal_eigenvalues


def spectral_measure(J: JacobiMatrix) -> SpectralMeasure:
    """
    The spectral measure Σ f_j(1)² δ_{λ_j} of J.

    For generic J (positive off-diagonal) the map J ↦ μ is a bijection;
    `lanczos_reconstruct` inverts it.
    """
    values, first = eigen_tridiagonal(J)
    weights = first ** 2
    return SpectralMeasure(values, weights / weights.sum())


def empirical_eigen_measure(J: JacobiMatrix) -> EmpiricalMeasure:
    """Mass 1/n at each eigenvalue of J."""
    return EmpiricalMeasure.from_points(tridiagonal_eigenvalues(J))


def singular_values(L: BidiagonalMatrix) -> np.ndarray:
    """
    Singular values of L in decreasing order.

    Read off as the n largest eigenvalues of the Golub-Kahan matrix, whose
    spectrum is {±σ_i}; rounding below zero is clipped.
    """
    values = tridiagonal_eigenvalues(symmetrize(L))
    return np.maximum(values[:L.n], 0.0)


def _positive_side(L: BidiagonalMatrix) -> tuple:
    values, first = eigen_tridiagonal(symmetrize(L))
    n = L.n
    squared = first ** 2
    # eigenvectors for ±σ_j share |first component|; average the pair
    weights = 0.5 * (squared[:n] + squared[n:][::-1])
    return np.maximum(values[:n], 0.0), weights / weights.sum()


def symmetrized_spectral_measure(L: BidiagonalMatrix) -> SpectralMeasure:
    """
    Spectral measure of the Golub-Kahan matrix of L, made exactly even.

    Atoms ±σ_j each carry ½ v_j(1)², where v_j(1) is the first component of
    the j-th right singular vector of L.
    """
    sigma, weights = _positive_side(L)
    points = np.concatenate([sigma, -sigma[::-1]])
    half = 0.5 * weights
    return SpectralMeasure(points, np.concatenate([half, half[::-1]]))


def symmetrized_empirical_measure(L: BidiagonalMatrix) -> EmpiricalMeasure:
    """Mass 1/2n at each ±σ_j."""
    sigma = singular_values(L)
    return EmpiricalMeasure.from_points(np.concatenate([sigma, -sigma]))


def wishart_sqrt_measure(L: BidiagonalMatrix) -> SpectralMeasure:
    """
    Atoms σ_j with weights v_j(1)², twice the positive side of the symmetrized measure.

    Equivalently the spectral measure of LᵀL pushed forward by λ ↦ √λ.
    """
    sigma, weights = _positive_side(L)
    return SpectralMeasure(sigma, weights)


def singular_value_measure(L: BidiagonalMatrix) -> EmpiricalMeasure:
    """Mass 1/n at each singular value of L."""
    return EmpiricalMeasure.from_points(singular_values(L))
