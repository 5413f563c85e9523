import numpy as np

from betaproc.kernels.domain import OUParams
from betaproc.matproc.domain import BidiagonalMatrix, JacobiMatrix
from betaproc.matproc.repository import hermite_init, hermite_step, laguerre_init, laguerre_step


def sample_hermite_at(n: int, beta: float, t: float, rng: np.random.Generator,
                      clock: OUParams = OUParams()) -> JacobiMatrix:
    """J_β(t) from the zero matrix, in one exact step."""
    return hermite_step(hermite_init(n, beta, rng, clock), t).entries


def sample_laguerre_at(n: int, beta: float, a: float, t: float, rng: np.random.Generator,
                       clock: OUParams = OUParams()) -> BidiagonalMatrix:
    """L_{β,a}(t) from the zero matrix, in one exact step."""
    return laguerre_step(laguerre_init(n, beta, a, rng, clock), t).entries
