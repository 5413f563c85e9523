from dataclasses import dataclass

import numpy as np

from betaproc.errors import DomainError


@dataclass(frozen=True)
class OUParams:
    """
    Parameters of the Ornstein-Uhlenbeck equation dv = -a v dt + σ db.

    Attributes:
    ----------
    a : float
        Mean-reversion rate, a > 0.
    sigma : float
        Noise amplitude, σ ≠ 0.
    """
    a: float = 0.5
    sigma: float = 1.0

    def __post_init__(self):
        if not self.a > 0:
            raise DomainError(f"mean-reversion rate must be positive, got a={self.a}")
        if self.sigma == 0 or not np.isfinite(self.sigma):
            raise DomainError(f"noise amplitude must be finite and nonzero, got sigma={self.sigma}")

    @classmethod
    def canonical(cls) -> "OUParams":
        """The normalization (a, σ) = (1/2, 1), for which ρ(t) = 1 - e^{-t}."""
        return cls(a=0.5, sigma=1.0)

    @property
    def rho_inf(self) -> float:
        return self.sigma ** 2 / (2.0 * self.a)

    def to_dict(self) -> dict:
        return {"a": self.a, "sigma": self.sigma}


@dataclass(frozen=True)
class BesselParams:
    """
    Parameters of the generalized Bessel process of dimension δ.

    The process is σ e^{-at} times a Bessel process of dimension δ run on
    the clock (e^{2at} - 1)/2a. For 0 < δ < 2 the origin is an instantaneous
    reflecting barrier, which the exact transition law already encodes.
    """
    delta: float
    a: float = 0.5
    sigma: float = 1.0

    def __post_init__(self):
        if not self.delta > 0:
            raise DomainError(f"Bessel dimension must be positive, got delta={self.delta}")
        OUParams(self.a, self.sigma)

    @classmethod
    def canonical(cls, delta: float) -> "BesselParams":
        return cls(delta=delta, a=0.5, sigma=1.0)

    @property
    def ou(self) -> OUParams:
        return OUParams(self.a, self.sigma)

    @property
    def nu(self) -> float:
        """Bessel order ν = δ/2 - 1."""
        return self.delta / 2.0 - 1.0

    @property
    def rho_inf(self) -> float:
        return self.ou.rho_inf

    def to_dict(self) -> dict:
        return {"delta": self.delta, "a": self.a, "sigma": self.sigma}


def rho(t, params: OUParams = OUParams()):
    """
    Variance clock ρ(t) = σ²(1 - e^{-2at}) / 2a.

    ρ(0) = 0, ρ is strictly increasing and ρ(∞) = σ²/2a. `t` may be an
    array and may contain +inf.
    """
    t = np.asarray(t, dtype=float)
    if np.any(~(t >= 0)):
        raise DomainError(f"time must be nonnegative, got t={t}")
    values = -params.sigma ** 2 * np.expm1(-2.0 * params.a * t) / (2.0 * params.a)
    return float(values) if values.ndim == 0 else values


@dataclass(frozen=True)
class VarianceClock:
    """ρ(t) bound to a fixed set of OU parameters."""
    params: OUParams = OUParams()

    def __call__(self, t):
        return rho(t, self.params)

    @property
    def limit(self) -> float:
        return self.params.rho_inf

    def time_of(self, value: float) -> float:
        """Inverse clock: the time t at which ρ(t) = value."""
        if not 0 <= value < self.limit:
            raise DomainError(f"rho value must lie in [0, {self.limit}), got {value}")
        return float(-np.log1p(-value / self.limit) / (2.0 * self.params.a))
