import numpy as np

from betaproc.errors import DomainError
from betaproc.matproc.domain import JacobiMatrix
from betaproc.spectral.domain import AtomicMeasure


def lanczos_reconstruct(measure: AtomicMeasure) -> JacobiMatrix:
    """
    The Jacobi matrix whose spectral measure is `measure`.

    Runs the Lanczos recurrence on diag(λ) from the start vector (√μ_j), with
    full reorthogonalization. Needs n distinct atoms of positive weight.
    """
    points, weights = measure.points, measure.weights
    n = measure.size
    if np.any(weights <= 0) or np.unique(points).size != n:
        raise DomainError("reconstruction needs distinct atoms with positive weights")
    basis = np.zeros((n, n))
    basis[:, 0] = np.sqrt(weights / weights.sum())
    diag = np.zeros(n)
    offdiag = np.zeros(n - 1)
    for j in range(n):
        w = points * basis[:, j]
        diag[j] = basis[:, j] @ w
        w -= diag[j] * basis[:, j]
        if j > 0:
            w -= offdiag[j - 1] * basis[:, j - 1]
        for _ in range(2):
            w -= basis[:, :j + 1] @ (basis[:, :j + 1].T @ w)
        if j < n - 1:
            offdiag[j] = np.linalg.norm(w)
            basis[:, j + 1] = w / offdiag[j]
    return JacobiMatrix(diag, offdiag)
