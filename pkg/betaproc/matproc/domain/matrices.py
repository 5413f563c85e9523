from dataclasses import dataclass

import numpy as np
import pandas as pd

from betaproc.errors import DomainError


def _vector(values) -> np.ndarray:
    return np.array(values, dtype=float).reshape(-1)


def _frame(rows: dict) -> pd.DataFrame:
    records = [
        {"row": name, "index": index + 1, "value": float(value)}
        for name, values in rows.items()
        for index, value in enumerate(values)
    ]
    return pd.DataFrame.from_records(records, columns=["row", "index", "value"])


def _rows_from_frame(frame: pd.DataFrame, names: tuple) -> list:
    rows = []
    for name in names:
        part = frame[frame["row"] == name].sort_values("index")
        rows.append(part["value"].to_numpy(dtype=float))
    return rows


@dataclass
class JacobiMatrix:
    """
    Symmetric tridiagonal matrix in compact storage.

    Attributes:
    ----------
    diag : np.ndarray
        The n diagonal entries a_1, ..., a_n.
    offdiag : np.ndarray
        The n - 1 entries b_i = J_{i,i+1}. A Jacobi matrix proper has b_i > 0;
        zero entries are stored as given (the process starts from 0).
    """
    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self):
        self.diag = _vector(self.diag)
        self.offdiag = _vector(self.offdiag)
        if self.diag.size < 1:
            raise DomainError("a Jacobi matrix needs at least one diagonal entry")
        if self.offdiag.size != self.diag.size - 1:
            raise DomainError(
                f"offdiag must hold n-1={self.diag.size - 1} entries, got {self.offdiag.size}"
            )

    @property
    def n(self) -> int:
        return int(self.diag.size)

    def is_generic(self) -> bool:
        """True when every off-diagonal entry is strictly positive."""
        return bool(np.all(self.offdiag > 0))

    def to_dense(self) -> np.ndarray:
        return np.diag(self.diag) + np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)

    def matvec(self, vector: np.ndarray) -> np.ndarray:
        result = self.diag * vector
        result[:-1] += self.offdiag * vector[1:]
        result[1:] += self.offdiag * vector[:-1]
        return result

    def scaled(self, factor: float) -> "JacobiMatrix":
        return JacobiMatrix(self.diag * factor, self.offdiag * factor)

    def to_dict(self) -> dict:
        return {"type": "jacobi", "diag": self.diag.tolist(), "offdiag": self.offdiag.tolist()}

    @classmethod
    def from_dict(cls, data: dict) -> "JacobiMatrix":
        return cls(data["diag"], data["offdiag"])

    def to_frame(self) -> pd.DataFrame:
        """Rows `diag`/`offdiag` with 1-based `index` and `value` columns."""
        return _frame({"diag": self.diag, "offdiag": self.offdiag})

    @classmethod
    def from_frame(cls, frame: pd.DataFrame) -> "JacobiMatrix":
        return cls(*_rows_from_frame(frame, ("diag", "offdiag")))


@dataclass
class BidiagonalMatrix:
    """
    Upper bidiagonal matrix L with L_ii = x_i and L_{i,i+1} = y_i.

    Attributes:
    ----------
    diag : np.ndarray
        The n diagonal entries x_i ≥ 0.
    superdiag : np.ndarray
        The n - 1 superdiagonal entries y_i ≥ 0.
    """
    diag: np.ndarray
    superdiag: np.ndarray

    def __post_init__(self):
        self.diag = _vector(self.diag)
        self.superdiag = _vector(self.superdiag)
        if self.diag.size < 1:
            raise DomainError("a bidiagonal matrix needs at least one diagonal entry")
        if self.superdiag.size != self.diag.size - 1:
            raise DomainError(
                f"superdiag must hold n-1={self.diag.size - 1} entries, got {self.superdiag.size}"
            )

    @property
    def n(self) -> int:
        return int(self.diag.size)

    def to_dense(self) -> np.ndarray:
        return np.diag(self.diag) + np.diag(self.superdiag, 1)

    def scaled(self, factor: float) -> "BidiagonalMatrix":
        return BidiagonalMatrix(self.diag * factor, self.superdiag * factor)

    def to_dict(self) -> dict:
        return {"type": "bidiagonal", "diag": self.diag.tolist(), "superdiag": self.superdiag.tolist()}

    @classmethod
    def from_dict(cls, data: dict) -> "BidiagonalMatrix":
        return cls(data["diag"], data["superdiag"])

    def to_frame(self) -> pd.DataFrame:
        return _frame({"diag": self.diag, "superdiag": self.superdiag})

    @classmethod
    def from_frame(cls, frame: pd.DataFrame) -> "BidiagonalMatrix":
        return cls(*_rows_from_frame(frame, ("diag", "superdiag")))
