import numpy as np
from scipy import special as sp

from betaproc.errors import DomainError
from betaproc.kernels.domain import BesselParams, rho
from betaproc.special import laguerre_table
from .bessel_kernel import bessel_stationary_density, bessel_transition_density


def _laguerre_expansion(t: float, x0: float, x, params: BesselParams, n_terms: int,
                        reference_variance: float):
    if not t > 0:
        raise DomainError(f"t must be positive, got {t}")
    if not x0 > 0:
        raise DomainError(f"the series expansion needs x0 > 0, got {x0}")
    if n_terms < 1:
        raise DomainError(f"n_terms must be at least 1, got {n_terms}")
    x = np.asarray(x, dtype=float)
    half = params.delta / 2.0
    order = np.arange(n_terms)
    # n! Γ(δ/2) / Γ(n + δ/2): equals n B(n, δ/2) for n ≥ 1 and 1 at n = 0
    log_coefficients = sp.gammaln(order + 1) + sp.gammaln(half) - sp.gammaln(order + half)
    weights = np.exp(log_coefficients - 2.0 * params.a * order * t)
    start = laguerre_table(n_terms - 1, params.nu, x0 ** 2 / (2.0 * reference_variance))
    end = laguerre_table(n_terms - 1, params.nu, x ** 2 / (2.0 * reference_variance))
    total = np.tensordot(weights * start, end, axes=(0, 0))
    values = bessel_stationary_density(x, params) * total
    return float(values) if np.ndim(values) == 0 else values


def paper_series(t: float, x0: float, x, params: BesselParams, n_terms: int):
    """
    Partial sum of the Laguerre expansion with arguments x²/2ρ(t).

    This reading does not reproduce the closed-form kernel for finite t;
    `series_discrepancy` reports by how much.
    """
    return _laguerre_expansion(t, x0, x, params, n_terms, rho(t, params.ou))


def corrected_series(t: float, x0: float, x, params: BesselParams, n_terms: int):
    """
    Partial sum of the Laguerre expansion with arguments x²/2ρ(∞).

    The Laguerre polynomials L_n^{δ/2-1}(x²/2ρ(∞)) are orthogonal under the
    stationary law, with squared norms Γ(n+δ/2)/(n! Γ(δ/2)), and the kernel
    decays mode by mode as e^{-2ant}. With one term both series equal p^δ_∞(x).
    """
    return _laguerre_expansion(t, x0, x, params, n_terms, params.rho_inf)


def bessel_transition_laguerre_series(t: float, x0: float, x, params: BesselParams,
                                      n_terms: int, variant: str = "corrected"):
    """Laguerre expansion of the Bessel kernel; `variant` is 'corrected' or 'paper'."""
    if variant == "corrected":
        return corrected_series(t, x0, x, params, n_terms)
    if variant == "paper":
        return paper_series(t, x0, x, params, n_terms)
    raise DomainError(f"unknown series variant '{variant}'")


def series_discrepancy(t: float, x0_grid, x_grid, params: BesselParams, n_terms: int = 50,
                       tolerance: float = 1e-6) -> dict:
    """
    Compares both series readings against the closed-form kernel on a grid.

    Returns:
    -------
    dict
        Maximal absolute deviations `paper_deviation` and
        `corrected_deviation`, and `matching`, the variants within `tolerance`.
    """
    x_grid = np.asarray(x_grid, dtype=float)
    deviations = {"paper": 0.0, "corrected": 0.0}
    for x0 in np.asarray(x0_grid, dtype=float):
        exact = bessel_transition_density(t, x0, x_grid, params)
        deviations["paper"] = max(deviations["paper"],
                                  float(np.max(np.abs(paper_series(t, x0, x_grid, params, n_terms) - exact))))
        deviations["corrected"] = max(deviations["corrected"],
                                      float(np.max(np.abs(corrected_series(t, x0, x_grid, params, n_terms) - exact))))
    return {
        "t": float(t),
        "n_terms": int(n_terms),
        "paper_deviation": deviations["paper"],
        "corrected_deviation": deviations["corrected"],
        "matching": [name for name, value in sorted(deviations.items()) if value <= tolerance],
    }
