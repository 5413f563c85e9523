from dataclasses import dataclass, field

import numpy as np

from betaproc.errors import DomainError
from betaproc.kernels.domain import OUParams
from .matrices import BidiagonalMatrix, JacobiMatrix


def _check_size_and_beta(n: int, beta: float):
    if int(n) != n or n < 1:
        raise DomainError(f"matrix size must be a positive integer, got n={n}")
    if not beta > 0:
        raise DomainError(f"beta must be positive, got beta={beta}")


@dataclass
class HermiteProcessState:
    """
    The β-Hermite process at time t.

    Diagonal entry i is an OU coordinate divided by √β; off-diagonal entry j
    (1-based) is a generalized Bessel coordinate of dimension (n-j)β divided
    by √(2β). The generator carries the random stream forward.
    """
    n: int
    beta: float
    t: float
    entries: JacobiMatrix
    rng: np.random.Generator = field(repr=False, compare=False)
    clock: OUParams = OUParams()

    def __post_init__(self):
        _check_size_and_beta(self.n, self.beta)
        if self.entries.n != self.n:
            raise DomainError(f"entries have size {self.entries.n}, expected {self.n}")

    @property
    def offdiag_dimensions(self) -> np.ndarray:
        """Bessel dimensions (n-1)β, (n-2)β, ..., β of the off-diagonal entries."""
        return self.beta * np.arange(self.n - 1, 0, -1, dtype=float)

    def kernel_coordinates(self) -> tuple:
        """Unscaled OU and Bessel coordinates √β a_i and √(2β) b_j."""
        return (np.sqrt(self.beta) * self.entries.diag,
                np.sqrt(2.0 * self.beta) * self.entries.offdiag)


@dataclass
class LaguerreProcessState:
    """
    The β-Laguerre process at time t, parametrized by a > -1.

    Diagonal entry i has Bessel dimension (a+n-i+1)β and superdiagonal entry
    i has dimension (n-i)β, both divided by √β.
    """
    n: int
    beta: float
    a: float
    t: float
    entries: BidiagonalMatrix
    rng: np.random.Generator = field(repr=False, compare=False)
    clock: OUParams = OUParams()

    def __post_init__(self):
        _check_size_and_beta(self.n, self.beta)
        if not self.a > -1:
            raise DomainError(f"Laguerre parameter must satisfy a > -1, got a={self.a}")
        if self.entries.n != self.n:
            raise DomainError(f"entries have size {self.entries.n}, expected {self.n}")

    @property
    def diag_dimensions(self) -> np.ndarray:
        return self.beta * (self.a + np.arange(self.n, 0, -1, dtype=float))

    @property
    def superdiag_dimensions(self) -> np.ndarray:
        return self.beta * np.arange(self.n - 1, 0, -1, dtype=float)
