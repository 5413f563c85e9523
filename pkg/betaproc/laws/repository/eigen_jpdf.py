import numpy as np
from scipy import integrate
from scipy import special as sp

from betaproc.errors import DomainError
from betaproc.kernels.domain import OUParams, rho
from betaproc.laws.domain import EigenJpdfParams


def _log_abs_vandermonde(values: np.ndarray) -> float:
    rows, cols = np.triu_indices(values.size, 1)
    gaps = np.abs(values[rows] - values[cols])
    if np.any(gaps == 0):
        return -np.inf
    return float(np.sum(np.log(gaps)))


def _as_vector(values, n: int) -> np.ndarray:
    values = np.asarray(values, dtype=float).reshape(-1)
    if values.size != n:
        raise DomainError(f"expected {n} eigenvalues, got {values.size}")
    return values


def hermite_energy(t: float, values, clock: OUParams = OUParams()) -> float:
    """W(t, λ) = Σ λ_i² / 2ρ(t) - Σ_{i<j} ln|λ_i - λ_j|; +inf at coinciding λ."""
    values = np.asarray(values, dtype=float).reshape(-1)
    return float(np.sum(values ** 2) / (2.0 * rho(t, clock)) - _log_abs_vandermonde(values))


def hermite_log_normalizer(n: int, beta: float) -> float:
    """ln C_{nβ} with C_{nβ} = (2π)^{-n/2} β^{n/2+βn(n-1)/4} Π_j Γ(1+β/2)/Γ(1+jβ/2)."""
    j = np.arange(1, n + 1)
    return float(-0.5 * n * np.log(2.0 * np.pi) + (0.5 * n + 0.25 * beta * n * (n - 1)) * np.log(beta)
                 + np.sum(sp.gammaln(1.0 + beta / 2.0) - sp.gammaln(1.0 + j * beta / 2.0)))


def hermite_eigen_log_jpdf(values, params: EigenJpdfParams) -> float:
    """
    Log joint density of the unordered eigenvalues of J_β(t) started from 0.

    ln C_{nβ} - (n/2 + βn(n-1)/4) ln ρ(t) - β W(t, λ); -inf when two
    eigenvalues coincide. Multiply by n! for ordered samples.
    """
    n, beta = params.n, params.beta
    values = _as_vector(values, n)
    energy = hermite_energy(params.t, values, params.clock)
    if not np.isfinite(energy):
        return -np.inf
    exponent = 0.5 * n + 0.25 * beta * n * (n - 1)
    return hermite_log_normalizer(n, beta) - exponent * np.log(params.rho) - beta * energy


def _wishart_gamma_terms(n: int, beta: float, a: float) -> float:
    j = np.arange(1, n + 1)
    return float(np.sum(sp.gammaln(1.0 + beta / 2.0) - sp.gammaln(1.0 + j * beta / 2.0)
                        - sp.gammaln((a + j) * beta / 2.0)))


def wishart_eigen_log_jpdf(values, params: EigenJpdfParams, verbatim: bool = False) -> float:
    """
    Log joint density of the unordered eigenvalues of J_{β,a}(t) = LᵀL.

    The default form is the push-forward of the entry density of L,
        (β/2ρ)^{βn²/2 + βan/2} Π_j Γ(1+β/2) / (Γ(1+jβ/2) Γ((a+j)β/2))
        × |Δ(λ)|^β Π λ_i^{(a+1)β/2 - 1} exp(-β Σ λ_i / 2ρ),
    which at n = 1 is the Gamma((a+1)β/2, scale 2ρ/β) law of x².

    verbatim=True evaluates the printed closed form instead, with constant
    (β/2)^{β(an + n²)/4} ρ^{-β(an + n²)/4} and exponent -β Σ λ_i² / 2ρ. It
    does not integrate to one and is kept for the audit only.

    Returns -inf for nonpositive or coinciding eigenvalues.
    """
    n, beta, a = params.n, params.beta, params.a
    values = _as_vector(values, n)
    if np.any(values <= 0):
        return -np.inf
    log_vandermonde = _log_abs_vandermonde(values)
    if not np.isfinite(log_vandermonde):
        return -np.inf
    variance = params.rho
    shape_term = ((a + 1.0) * beta / 2.0 - 1.0) * np.sum(np.log(values))
    gamma_terms = _wishart_gamma_terms(n, beta, a)
    if verbatim:
        power = 0.25 * beta * (a * n + n ** 2)
        return float(power * np.log(beta / 2.0) + gamma_terms - power * np.log(variance)
                     + beta * log_vandermonde + shape_term
                     - beta * np.sum(values ** 2) / (2.0 * variance))
    power = 0.5 * beta * (n ** 2 + a * n)
    return float(power * np.log(beta / (2.0 * variance)) + gamma_terms + beta * log_vandermonde
                 + shape_term - beta * np.sum(values) / (2.0 * variance))


def _integration_frame(params: EigenJpdfParams, verbatim: bool) -> tuple:
    """Map u ↦ λ, its derivative and the u-range that carries the mass."""
    variance, beta, n = params.rho, params.beta, params.n
    if params.kind == "hermite":
        reach = 12.0 * np.sqrt(variance / beta) + 4.0 * np.sqrt(variance * n)

        def log_density(values):
            return hermite_eigen_log_jpdf(values, params)

        return (lambda u: u), (lambda u: 1.0), -reach, reach, log_density
    shape = 0.5 * n * (params.a + n) * beta
    upper = 2.0 * variance / beta * (shape + 12.0 * np.sqrt(shape) + 40.0)

    def log_density(values):
        return wishart_eigen_log_jpdf(values, params, verbatim)

    # λ = u² removes the λ^{(a+1)β/2 - 1} edge singularity
    return (lambda u: u * u), (lambda u: 2.0 * u), 0.0, float(np.sqrt(upper)), log_density


def _ordered_pair_mass(params: EigenJpdfParams, lower: float, upper: float, verbatim: bool) -> float:
    transform, derivative, start, _, log_density = _integration_frame(params, verbatim)

    def integrand(u2, u1):
        values = np.array([transform(u1), transform(u2)])
        return np.exp(log_density(values)) * derivative(u1) * derivative(u2)

    value, _ = integrate.dblquad(integrand, lower, upper, lambda u1: start, lambda u1: u1,
                                 epsabs=1e-11, epsrel=1e-9)
    return 2.0 * value


def eigen_jpdf_total_mass(params: EigenJpdfParams, verbatim: bool = False) -> float:
    """
    Integral of the eigenvalue density over all of ℝ^n, for n ∈ {1, 2}.

    n = 2 integrates over the ordered region and doubles the result.
    """
    transform, derivative, start, stop, log_density = _integration_frame(params, verbatim)
    if params.n == 1:
        value, _ = integrate.quad(
            lambda u: np.exp(log_density(np.array([transform(u)]))) * derivative(u),
            start, stop, epsabs=1e-12, epsrel=1e-10, limit=200)
        return float(value)
    if params.n == 2:
        return float(_ordered_pair_mass(params, start, stop, verbatim))
    raise DomainError(f"total mass by quadrature supports n <= 2, got n={params.n}")


def eigen_max_cdf(params: EigenJpdfParams, grid, verbatim: bool = False) -> np.ndarray:
    """
    P(λ_max ≤ x) for n = 2 at each point of an increasing grid.

    Accumulated interval by interval over the ordered region.
    """
    if params.n != 2:
        raise DomainError(f"eigen_max_cdf supports n = 2, got n={params.n}")
    grid = np.asarray(grid, dtype=float)
    if np.any(np.diff(grid) <= 0):
        raise DomainError("grid must be strictly increasing")
    _, _, start, _, _ = _integration_frame(params, verbatim)
    if params.kind == "wishart":
        nodes = np.sqrt(np.maximum(grid, 0.0))
    else:
        nodes = grid
    values = np.zeros(grid.size)
    total, previous = 0.0, start
    for index, node in enumerate(nodes):
        node = max(node, start)
        if node > previous:
            total += _ordered_pair_mass(params, previous, node, verbatim)
            previous = node
        values[index] = total
    return values
