import json
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Optional

import numpy as np

from betaproc.errors import DomainError
from betaproc.kernels.domain import OUParams, rho

LIMIT_KINDS = ("semicircle", "mp", "quarter", "symmetrized")


class LawDescriptor(ABC):
    """
    A closed-form reference law on the real line.

    Subclasses provide the density, distribution function and raw moments,
    and the parameters that identify the law in a JSON record.
    """

    kind: str

    @abstractmethod
    def pdf(self, x):
        raise NotImplementedError

    @abstractmethod
    def cdf(self, x):
        raise NotImplementedError

    @abstractmethod
    def raw_moment(self, r: float) -> float:
        raise NotImplementedError

    @abstractmethod
    def parameters(self) -> dict:
        raise NotImplementedError

    @property
    def mean(self) -> float:
        return self.raw_moment(1)

    def to_dict(self) -> dict:
        return {"kind": self.kind, **self.parameters()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


@dataclass(frozen=True)
class LimitLaw:
    """
    One of the time-dependent limit laws, identified by kind and ρ.

    Attributes:
    ----------
    kind : str
        'semicircle' on [-√(2ρ), √(2ρ)], 'mp' on [0, 4ρ], 'quarter' on
        [0, 2√ρ] or 'symmetrized' on [-2√ρ, 2√ρ].
    rho : float
        Value of the variance clock, ρ > 0.
    """
    kind: str
    rho: float

    def __post_init__(self):
        if self.kind not in LIMIT_KINDS:
            raise DomainError(f"unknown limit law '{self.kind}', expected one of {LIMIT_KINDS}")
        if not self.rho > 0 or not np.isfinite(self.rho):
            raise DomainError(f"limit law needs finite rho > 0, got {self.rho}")

    @classmethod
    def at_time(cls, kind: str, t: float, clock: OUParams = OUParams()) -> "LimitLaw":
        return cls(kind, rho(t, clock))

    @property
    def radius(self) -> float:
        """Radius of the underlying semicircle (4ρ, the soft edge, for 'mp')."""
        if self.kind == "semicircle":
            return float(np.sqrt(2.0 * self.rho))
        if self.kind == "mp":
            return 4.0 * self.rho
        return float(2.0 * np.sqrt(self.rho))

    @property
    def support(self) -> tuple:
        if self.kind in ("semicircle", "symmetrized"):
            return (-self.radius, self.radius)
        return (0.0, self.radius)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "rho": self.rho}

    @classmethod
    def from_dict(cls, data: dict) -> "LimitLaw":
        return cls(data["kind"], float(data["rho"]))


@dataclass(frozen=True)
class EigenJpdfParams:
    """
    Parameters of an eigenvalue joint density at time t.

    Attributes:
    ----------
    kind : str
        'hermite' or 'wishart'.
    n : int
        Number of eigenvalues.
    beta : float
        β > 0.
    t : float
        Time, t > 0.
    a : float, optional
        Laguerre parameter a > -1; wishart only.
    clock : OUParams
        OU rate and amplitude.
    """
    kind: str
    n: int
    beta: float
    t: float
    a: Optional[float] = None
    clock: OUParams = OUParams()

    def __post_init__(self):
        if self.kind not in ("hermite", "wishart"):
            raise DomainError(f"unknown eigenvalue density '{self.kind}'")
        if int(self.n) != self.n or self.n < 1:
            raise DomainError(f"n must be a positive integer, got {self.n}")
        if not self.beta > 0:
            raise DomainError(f"beta must be positive, got {self.beta}")
        if not self.t > 0:
            raise DomainError(f"t must be positive, got {self.t}")
        if self.kind == "wishart" and (self.a is None or not self.a > -1):
            raise DomainError(f"wishart density needs a > -1, got a={self.a}")

    @property
    def rho(self) -> float:
        return rho(self.t, self.clock)
