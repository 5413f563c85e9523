from dataclasses import dataclass
from typing import Tuple

import numpy as np
from scipy import special as sp
from scipy import stats

from betaproc.errors import DomainError
from betaproc.laws.domain import LawDescriptor

WEIGHT_KINDS = ("beta", "generalized_beta_half", "point")


@dataclass(frozen=True)
class WeightLaw(LawDescriptor):
    """
    Law of a partial sum of spectral weights.

    Attributes:
    ----------
    kind : str
        'beta' for Beta(α₁, α₂) on [0, 1], 'generalized_beta_half' for the
        same law scaled to [0, 1/2], 'point' for the degenerate law at `scale`.
    alpha : tuple
        (α₁, α₂), both positive; empty for 'point'.
    scale : float
        1 for 'beta', 1/2 for 'generalized_beta_half', the atom for 'point'.
    """
    kind: str
    alpha: Tuple[float, ...] = ()
    scale: float = 1.0

    def __post_init__(self):
        if self.kind not in WEIGHT_KINDS:
            raise DomainError(f"unknown weight law '{self.kind}'")
        if self.kind != "point" and (len(self.alpha) != 2 or min(self.alpha) <= 0):
            raise DomainError(f"Beta parameters must be two positive numbers, got {self.alpha}")

    @property
    def support(self) -> tuple:
        if self.kind == "point":
            return (self.scale, self.scale)
        return (0.0, self.scale)

    def pdf(self, x):
        x = np.asarray(x, dtype=float)
        if self.kind == "point":
            values = np.where(x == self.scale, np.inf, 0.0)
        else:
            values = stats.beta.pdf(x / self.scale, *self.alpha) / self.scale
        return float(values) if values.ndim == 0 else values

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        if self.kind == "point":
            values = (x >= self.scale).astype(float)
        else:
            values = stats.beta.cdf(x / self.scale, *self.alpha)
        return float(values) if values.ndim == 0 else values

    def raw_moment(self, r: float) -> float:
        """E[S^r] = scale^r Γ(α₁+r) Γ(α₁+α₂) / (Γ(α₁) Γ(α₁+α₂+r))."""
        if self.kind == "point":
            return float(self.scale ** r)
        first, second = self.alpha
        total = first + second
        return float(self.scale ** r * np.exp(sp.gammaln(first + r) + sp.gammaln(total)
                                              - sp.gammaln(first) - sp.gammaln(total + r)))

    def central_moment(self, r: int) -> float:
        """E[(S - E S)^r] from the raw moments."""
        mean = self.mean
        return float(sum(sp.comb(r, j, exact=True) * self.raw_moment(j) * (-mean) ** (r - j)
                         for j in range(r + 1)))

    @property
    def variance(self) -> float:
        return self.central_moment(2)

    def sample(self, size: int, rng: np.random.Generator) -> np.ndarray:
        if self.kind == "point":
            return np.full(size, self.scale)
        return self.scale * rng.beta(*self.alpha, size=size)

    def parameters(self) -> dict:
        return {"alpha": list(self.alpha), "scale": self.scale}


@dataclass(frozen=True)
class DirichletLaw(LawDescriptor):
    """Joint law Dir(α_1, ..., α_n) of the full weight vector."""
    alpha: Tuple[float, ...]
    kind: str = "dirichlet"

    def __post_init__(self):
        if len(self.alpha) < 1 or min(self.alpha) <= 0:
            raise DomainError(f"Dirichlet parameters must be positive, got {self.alpha}")

    def pdf(self, x):
        return float(stats.dirichlet.pdf(np.asarray(x, dtype=float), np.asarray(self.alpha)))

    def cdf(self, x):
        raise DomainError("the Dirichlet law has no univariate distribution function; use marginal()")

    def raw_moment(self, r: float) -> float:
        return self.marginal(0).raw_moment(r)

    def marginal(self, j: int) -> WeightLaw:
        """Law of the j-th coordinate (0-based), Beta(α_j, Σα - α_j)."""
        total = float(sum(self.alpha))
        if len(self.alpha) == 1:
            return WeightLaw("point", (), 1.0)
        return WeightLaw("beta", (self.alpha[j], total - self.alpha[j]))

    def parameters(self) -> dict:
        return {"alpha": list(self.alpha)}


def weight_distribution(kind: str, n: int, beta: float, k: int = 1):
    """
    Law of the spectral weights of an n × n matrix of the process `kind`.

    Parameters:
    ----------
    kind : str
        'dirichlet' for the whole vector Dir(β/2, ..., β/2); 'hermite',
        'wishart' or 'beta' for Σ_{j≤k} μ_j ~ Beta(kβ/2, (n-k)β/2);
        'symmetrized' or 'generalized_beta_half' for the symmetrized measure,
        whose positive-side partial sum is that Beta law scaled to [0, 1/2].
    n : int
        Matrix size.
    beta : float
        β > 0.
    k : int
        Number of summed weights, 1 ≤ k ≤ n. At k = n the law is a point mass.

    Returns:
    -------
    WeightLaw or DirichletLaw
        The law, independent of t.
    """
    if int(n) != n or n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    if not beta > 0:
        raise DomainError(f"beta must be positive, got {beta}")
    if kind == "dirichlet":
        return DirichletLaw(tuple([beta / 2.0] * n))
    if not 1 <= k <= n or int(k) != k:
        raise DomainError(f"k must be an integer in [1, {n}], got {k}")
    if kind in ("hermite", "wishart", "beta"):
        scale, law_kind = 1.0, "beta"
    elif kind in ("symmetrized", "generalized_beta_half"):
        scale, law_kind = 0.5, "generalized_beta_half"
    else:
        raise DomainError(f"unknown weight distribution kind '{kind}'")
    if k == n:
        return WeightLaw("point", (), scale)
    return WeightLaw(law_kind, (k * beta / 2.0, (n - k) * beta / 2.0), scale)


def chebyshev_union_bound(n: int, beta: float, epsilon: float, kind: str = "hermite") -> float:
    """
    Upper bound on P(max_k |Σ_{j≤k} μ_j - E Σ_{j≤k} μ_j| > ε).

    Union bound over k combined with Markov's inequality on the exact fourth
    central moments: ε^{-4} Σ_{k=1}^{n-1} E|S_k - E S_k|⁴.
    """
    if not epsilon > 0:
        raise DomainError(f"epsilon must be positive, got {epsilon}")
    total = sum(weight_distribution(kind, n, beta, k).central_moment(4) for k in range(1, n))
    return float(total / epsilon ** 4)


def first_component_log_density(q, beta: float) -> float:
    """
    Log density of the first eigenvector components on the positive sphere.

    ln(2^{n-1} Γ(nβ/2) / Γ(β/2)^n) + (β-1) Σ ln q_i with respect to surface
    measure; -inf off the open positive orthant.
    """
    q = np.asarray(q, dtype=float).reshape(-1)
    n = q.size
    if np.any(q <= 0):
        return -np.inf
    if abs(np.sum(q ** 2) - 1.0) > 1e-10:
        raise DomainError("first components must have unit Euclidean norm")
    return float((n - 1) * np.log(2.0) + sp.gammaln(n * beta / 2.0) - n * sp.gammaln(beta / 2.0)
                 + (beta - 1.0) * np.sum(np.log(q)))
