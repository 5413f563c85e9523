import numpy as np
from loguru import logger
from scipy.linalg import LinAlgError, eigvalsh_tridiagonal

from betaproc.errors import ConvergenceError, DomainError
from betaproc.matproc.domain import JacobiMatrix

TIE_TOLERANCE = 1e-13
TIE_JITTER = 1e-12
BLOCK_ROWS = 256


def _dump(J: JacobiMatrix, limit: int = 8) -> str:
    options = {"precision": 17, "threshold": limit, "edgeitems": limit // 2}
    return (f"n={J.n}, diag={np.array2string(J.diag, **options)}, "
            f"offdiag={np.array2string(J.offdiag, **options)}")


def _separate_ties(values: np.ndarray) -> np.ndarray:
    if values.size < 2:
        return values
    scale = float(np.max(np.abs(values)))
    gaps = values[:-1] - values[1:]
    if np.any(gaps < TIE_TOLERANCE * scale):
        logger.warning(
            f"eigenvalues closer than {TIE_TOLERANCE:g} x scale (min gap {gaps.min():.3e}); "
            f"applying {TIE_JITTER:g} jitter"
        )
        values = values + TIE_JITTER * scale * np.arange(values.size - 1, -1, -1)
    return values


def _eigvals(diag: np.ndarray, offdiag: np.ndarray, J: JacobiMatrix) -> np.ndarray:
    if diag.size <= 1:
        return diag.copy()
    try:
        return eigvalsh_tridiagonal(diag, offdiag)
    except (LinAlgError, ValueError) as error:
        raise ConvergenceError(f"tridiagonal eigensolver failed for {_dump(J)}: {error}") from error


def _leading_block_size(J: JacobiMatrix) -> int:
    # LAPACK splitting criterion: |b_i| <= eps sqrt(|a_i a_{i+1}|)
    threshold = np.finfo(float).eps * np.sqrt(np.abs(J.diag[:-1] * J.diag[1:]))
    split = np.flatnonzero(np.abs(J.offdiag) <= threshold)
    return int(split[0]) + 1 if split.size else J.n


def _log_abs_row_sums(gaps: np.ndarray, floor: float) -> np.ndarray:
    # overwrites gaps
    np.abs(gaps, out=gaps)
    np.maximum(gaps, floor, out=gaps)
    np.log(gaps, out=gaps)
    return gaps.sum(axis=1)


def _first_row_weights(values: np.ndarray, minor: np.ndarray) -> np.ndarray:
    """
    Squared first eigenvector components of an unreduced Jacobi matrix from its
    eigenvalues and those of the trailing minor:

        f_j(1)² = Π_k |λ_j - λ'_k| / Π_{k≠j} |λ_j - λ_k|

    The signs of both products agree by interlacing. Rows are processed in
    blocks so memory stays O(n · BLOCK_ROWS).
    """
    n = values.size
    floor = np.finfo(float).eps * max(1.0, float(np.max(np.abs(values))))
    log_weights = np.empty(n)
    for start in range(0, n, BLOCK_ROWS):
        stop = min(start + BLOCK_ROWS, n)
        rows = values[start:stop, None]
        log_weights[start:stop] = _log_abs_row_sums(rows - minor[None, :], floor)
        spread = rows - values[None, :]
        spread[np.arange(stop - start), np.arange(start, stop)] = 1.0
        log_weights[start:stop] -= _log_abs_row_sums(spread, floor)
    weights = np.exp(log_weights - np.max(log_weights))
    return weights / weights.sum()


def eigen_tridiagonal(J: JacobiMatrix) -> tuple:
    """
    Eigenvalues and first eigenvector components of a symmetric tridiagonal matrix.

    Only the first row of the eigenvector matrix is formed. The eigenvalues of J
    and of J with its first row and column removed come from LAPACK through
    `scipy.linalg.eigvalsh_tridiagonal`; the first components follow from the
    residues of (e₁, (z - J)⁻¹ e₁). Work is O(n²) and memory O(n). When an
    off-diagonal entry is negligible, components past the leading unreduced
    block are zero.

    Returns:
    -------
    tuple[np.ndarray, np.ndarray]
        Eigenvalues in decreasing order and the matching first components
        f_j(1) >= 0, with Σ f_j(1)² = 1.

    Raises:
    -------
    ConvergenceError
        If LAPACK reports failure or the components are not finite; the
        message carries the matrix entries.
    """
    if J.n == 1:
        return J.diag.copy(), np.ones(1)
    size = _leading_block_size(J)
    lead = _eigvals(J.diag[:size], J.offdiag[:size - 1], J)
    if size == 1:
        lead_weights = np.ones(1)
    else:
        minor = _eigvals(J.diag[1:size], J.offdiag[1:size - 1], J)
        lead_weights = _first_row_weights(lead, minor)
    rest = _eigvals(J.diag[size:], J.offdiag[size:], J)
    values = np.concatenate([lead, rest])
    weights = np.concatenate([lead_weights, np.zeros(rest.size)])
    if not np.all(np.isfinite(weights)):
        raise ConvergenceError(f"first eigenvector components are not finite for {_dump(J)}")
    order = np.argsort(values, kind="stable")[::-1]
    return _separate_ties(values[order]), np.sqrt(weights[order])


def tridiagonal_eigenvalues(J: JacobiMatrix) -> np.ndarray:
    """Eigenvalues only, in decreasing order."""
    return np.sort(_eigvals(J.diag, J.offdiag, J))[::-1]


def matrix_moment(J: JacobiMatrix, k: int) -> float:
    """(e₁, J^k e₁) by k tridiagonal matrix-vector products."""
    if k < 0:
        raise DomainError(f"moment order must be nonnegative, got {k}")
    vector = np.zeros(J.n)
    vector[0] = 1.0
    half = k // 2
    for _ in range(half):
        vector = J.matvec(vector)
    if k % 2 == 0:
        return float(vector @ vector)
    return float(vector @ J.matvec(vector))
