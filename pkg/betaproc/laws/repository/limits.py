import numpy as np
from scipy import special as sp

from betaproc.errors import DomainError, QuadratureError
from betaproc.laws.domain import LimitLaw
from betaproc.spectral.domain import EmpiricalMeasure
from betaproc.spectral.repository import matrix_moment
from betaproc.special import integrate_quad
from .operators import limiting_operator

MAX_MOMENT = 20
_GRID = 100001


def limit_density(law: LimitLaw, x):
    """
    Density of a limit law; zero outside its support.

    semicircle  √(2ρ - x²) / πρ
    mp          √((4ρ - x)/x) / 2πρ on (0, 4ρ), with a hard edge at 0
    quarter     √(4ρ - x²) / πρ on [0, 2√ρ]
    symmetrized √(4ρ - x²) / 2πρ on [-2√ρ, 2√ρ]
    """
    x = np.asarray(x, dtype=float)
    values = np.zeros_like(x)
    radius = law.radius
    if law.kind == "mp":
        inside = (x > 0) & (x < radius)
        xi = x[inside]
        values[inside] = np.sqrt((radius - xi) / xi) / (2.0 * np.pi * law.rho)
    else:
        lower = 0.0 if law.kind == "quarter" else -radius
        inside = (x >= lower) & (x <= radius)
        xi = x[inside]
        height = 1.0 if law.kind == "quarter" else 0.5
        values[inside] = height * np.sqrt(radius ** 2 - xi ** 2) * 4.0 / (np.pi * radius ** 2)
    return float(values) if values.ndim == 0 else values


def limit_cdf(law: LimitLaw, x):
    """Closed-form distribution function through the angle x = R sin φ (x = 4ρ sin²φ for mp)."""
    x = np.asarray(x, dtype=float)
    radius = law.radius
    if law.kind == "mp":
        phi = np.arcsin(np.sqrt(np.clip(x / radius, 0.0, 1.0)))
        values = (2.0 * phi + np.sin(2.0 * phi)) / np.pi
    else:
        phi = np.arcsin(np.clip(x / radius, -1.0, 1.0))
        values = 0.5 + (phi + np.sin(phi) * np.cos(phi)) / np.pi
        if law.kind == "quarter":
            values = np.maximum(2.0 * values - 1.0, 0.0)
    return float(values) if values.ndim == 0 else values


def limit_quantile(law: LimitLaw, q):
    """Inverse distribution function, by interpolation on a fine angular grid."""
    q = np.asarray(q, dtype=float)
    if np.any((q < 0) | (q > 1)):
        raise DomainError(f"quantile levels must lie in [0, 1], got {q}")
    lower = -0.5 * np.pi if law.kind in ("semicircle", "symmetrized") else 0.0
    phi = np.linspace(lower, 0.5 * np.pi, _GRID)
    if law.kind == "mp":
        points = law.radius * np.sin(phi) ** 2
    else:
        points = law.radius * np.sin(phi)
    values = np.interp(q, limit_cdf(law, points), points)
    return float(values) if values.ndim == 0 else values


def discretize(law: LimitLaw, m: int = 2000) -> EmpiricalMeasure:
    """Atoms at the quantiles (i - 1/2)/m, i = 1..m, each of mass 1/m."""
    if m < 1:
        raise DomainError(f"grid size must be positive, got {m}")
    levels = (np.arange(1, m + 1) - 0.5) / m
    return EmpiricalMeasure.from_points(limit_quantile(law, levels))


def limit_moment_quadrature(law: LimitLaw, k: int) -> float:
    """∫ x^k dμ with the square-root edges carried by an algebraic QUADPACK weight."""
    radius, rho_value = law.radius, law.rho
    options = {"epsabs": 1e-14, "epsrel": 1e-12, "weight": "alg"}
    if law.kind in ("semicircle", "symmetrized"):
        scale = 2.0 / (np.pi * radius ** 2)
        return integrate_quad(lambda x: scale * x ** k, -radius, radius, wvar=(0.5, 0.5), **options)
    if law.kind == "mp":
        return integrate_quad(lambda x: x ** k / (2.0 * np.pi * rho_value), 0.0, radius,
                              wvar=(-0.5, 0.5), **options)
    return integrate_quad(lambda x: x ** k * np.sqrt(radius + x) / (np.pi * rho_value), 0.0, radius,
                          wvar=(0.0, 0.5), **options)


def limit_moment_operator(law: LimitLaw, k: int) -> float:
    """
    k-th moment as (e₁, J^k e₁) of the limiting operator truncated at k+2.

    The quarter-circle law is the image of the Marchenko-Pastur law under
    x ↦ √x: even moments are Marchenko-Pastur moments of order k/2, odd ones
    are R^{k+2} B((k+1)/2, 3/2) / 2πρ with R = 2√ρ.
    """
    if law.kind == "quarter":
        if k % 2 == 0:
            return limit_moment_operator(LimitLaw("mp", law.rho), k // 2)
        radius = law.radius
        return float(radius ** (k + 2) * sp.beta((k + 1) / 2.0, 1.5) / (2.0 * np.pi * law.rho))
    kind = {"semicircle": "hermite", "mp": "wishart", "symmetrized": "symmetrized"}[law.kind]
    return matrix_moment(limiting_operator(kind, law.rho, k + 2), k)


def limit_moments(law: LimitLaw, k: int, route: str = "both", rtol: float = 1e-9) -> float:
    """
    k-th moment of a limit law, 0 ≤ k ≤ 20.

    route='both' computes the quadrature and the operator value and raises
    QuadratureError when they differ by more than `rtol` (relative to
    max(1, |moment|)).
    """
    if int(k) != k or not 0 <= k <= MAX_MOMENT:
        raise DomainError(f"moment order must be an integer in [0, {MAX_MOMENT}], got {k}")
    if k == 0:
        return 1.0
    if route == "quadrature":
        return limit_moment_quadrature(law, k)
    if route == "operator":
        return limit_moment_operator(law, k)
    if route != "both":
        raise DomainError(f"unknown moment route '{route}'")
    by_operator = limit_moment_operator(law, k)
    by_quadrature = limit_moment_quadrature(law, k)
    if abs(by_operator - by_quadrature) > rtol * max(1.0, abs(by_operator)):
        raise QuadratureError(
            f"{law.kind} moment {k}: operator {by_operator!r} vs quadrature {by_quadrature!r}"
        )
    return by_operator
