from dataclasses import dataclass

import numpy as np
import pandas as pd

from betaproc.errors import DomainError


@dataclass
class AtomicMeasure:
    """
    A finite atomic measure Σ w_j δ_{x_j}.

    Attributes:
    ----------
    points : np.ndarray
        Atom locations.
    weights : np.ndarray
        Nonnegative masses, one per atom.
    """
    points: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        self.points = np.array(self.points, dtype=float).reshape(-1)
        self.weights = np.array(self.weights, dtype=float).reshape(-1)
        if self.points.size != self.weights.size:
            raise DomainError(f"{self.points.size} atoms but {self.weights.size} weights")
        if np.any(self.weights < 0):
            raise DomainError("atom weights must be nonnegative")

    @property
    def size(self) -> int:
        return int(self.points.size)

    @property
    def total_mass(self) -> float:
        return float(self.weights.sum())

    def moment(self, k: int) -> float:
        """∫ x^k dμ."""
        return float(np.sum(self.weights * self.points ** k))

    def cdf(self, x):
        """Right-continuous distribution function μ((-∞, x])."""
        order = np.argsort(self.points, kind="stable")
        cumulative = np.concatenate([[0.0], np.cumsum(self.weights[order])])
        index = np.searchsorted(self.points[order], x, side="right")
        values = cumulative[index]
        return float(values) if np.ndim(values) == 0 else values

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"lambda": self.points, "weight": self.weights})

    def to_dict(self) -> dict:
        return {"type": type(self).__name__, "points": self.points.tolist(), "weights": self.weights.tolist()}

    @classmethod
    def from_frame(cls, frame: pd.DataFrame):
        return cls(frame["lambda"].to_numpy(dtype=float), frame["weight"].to_numpy(dtype=float))

    @classmethod
    def from_dict(cls, data: dict):
        return cls(data["points"], data["weights"])


@dataclass
class SpectralMeasure(AtomicMeasure):
    """
    Spectral measure Σ μ_j δ_{λ_j} of a Jacobi matrix.

    Atoms are sorted by λ descending and μ_j is the squared first component
    of the j-th normalized eigenvector, so Σ μ_j = 1.
    """

    @property
    def eigenvalues(self) -> np.ndarray:
        return self.points


@dataclass
class EmpiricalMeasure(AtomicMeasure):
    """Equal masses 1/n at n points, sorted descending."""

    @classmethod
    def from_points(cls, points) -> "EmpiricalMeasure":
        points = np.sort(np.asarray(points, dtype=float).reshape(-1))[::-1]
        if points.size == 0:
            raise DomainError("an empirical measure needs at least one point")
        return cls(points, np.full(points.size, 1.0 / points.size))


def fold(measure: AtomicMeasure) -> AtomicMeasure:
    """Push-forward under x ↦ |x|; atoms meeting at the same |x| merge."""
    magnitudes, inverse = np.unique(np.abs(measure.points), return_inverse=True)
    weights = np.bincount(inverse.reshape(-1), weights=measure.weights, minlength=magnitudes.size)
    return AtomicMeasure(magnitudes[::-1], weights[::-1])
