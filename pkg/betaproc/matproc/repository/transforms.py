import numpy as np

from betaproc.errors import DomainError
from betaproc.matproc.domain import BidiagonalMatrix, JacobiMatrix, LaguerreProcessState


def wishart_of(laguerre) -> JacobiMatrix:
    """
    The tridiagonal product J = LᵀL of an upper bidiagonal L.

    diag_1 = x_1², diag_i = x_i² + y_{i-1}² for i ≥ 2, offdiag_i = x_i y_i.

    Parameters:
    ----------
    laguerre : LaguerreProcessState or BidiagonalMatrix
        The factor L.
    """
    matrix = laguerre.entries if isinstance(laguerre, LaguerreProcessState) else laguerre
    x, y = matrix.diag, matrix.superdiag
    diag = x ** 2
    diag[1:] += y ** 2
    return JacobiMatrix(diag, x[:-1] * y)


def symmetrize(bidiag: BidiagonalMatrix) -> JacobiMatrix:
    """
    Golub-Kahan embedding of L into a 2n × 2n zero-diagonal Jacobi matrix.

    The off-diagonal reads (x_1, y_1, x_2, y_2, ..., x_n) and the spectrum is
    {±σ_i}, the singular values of L with both signs.
    """
    if isinstance(bidiag, LaguerreProcessState):
        bidiag = bidiag.entries
    n = bidiag.n
    offdiag = np.empty(2 * n - 1)
    offdiag[0::2] = bidiag.diag
    offdiag[1::2] = bidiag.superdiag
    return JacobiMatrix(np.zeros(2 * n), offdiag)


def scale_by_sqrt_n(matrix, n: int = None):
    """
    Divides every entry by √n; `n` defaults to the size of `matrix`.

    Pass n explicitly for a Golub-Kahan matrix, whose size is twice the size
    of the underlying L.
    """
    if n is None:
        n = matrix.n
    if not n >= 1:
        raise DomainError(f"n must be at least 1, got {n}")
    return matrix.scaled(1.0 / np.sqrt(n))
