import numpy as np
from scipy import special as sp
from scipy import stats

from betaproc.errors import DomainError
from betaproc.kernels.domain import BesselParams, TransitionKernel, rho
from .ou_kernel import OUKernel, _check_time


def _log_density_from_origin(x: np.ndarray, variance: float, delta: float) -> np.ndarray:
    # scaled χ_δ law: 2^{1-δ/2} v^{-δ/2} x^{δ-1} e^{-x²/2v} / Γ(δ/2)
    return ((1.0 - delta / 2.0) * np.log(2.0) - (delta / 2.0) * np.log(variance)
            + sp.xlogy(delta - 1.0, x) - x ** 2 / (2.0 * variance) - sp.gammaln(delta / 2.0))


def bessel_transition_log_density(t: float, x0: float, x, params: BesselParams):
    """
    Log transition density of the generalized Bessel process.

    For x0 > 0 this is
        (x/ρ) (x/m)^ν exp(-(x² + m²)/2ρ) I_ν(x m/ρ),  m = x0 e^{-at}, ν = δ/2 - 1,
    evaluated with the scaled Bessel function so that large x·m/ρ stays
    finite. For x0 = 0 it is the scaled χ_δ density with variance ρ(t).
    Points x < 0 get -inf.
    """
    _check_time(t)
    if x0 < 0:
        raise DomainError(f"Bessel starting point must be nonnegative, got x0={x0}")
    x = np.asarray(x, dtype=float)
    shape = x.shape
    x = np.atleast_1d(x)
    variance = rho(t, params.ou)
    nu, delta = params.nu, params.delta
    m = x0 * np.exp(-params.a * t)
    out = np.full(x.shape, -np.inf)
    inside = x >= 0
    with np.errstate(divide="ignore", invalid="ignore"):
        if m == 0:
            out[inside] = _log_density_from_origin(x[inside], variance, delta)
        else:
            positive = x > 0
            xp = x[positive]
            z = xp * m / variance
            out[positive] = (-np.log(variance) + nu * (np.log(xp) - np.log(m)) + np.log(xp)
                             - (xp - m) ** 2 / (2.0 * variance) + np.log(sp.ive(nu, z)))
            at_zero = x == 0
            out[at_zero] = (sp.xlogy(delta - 1.0, 0.0) - (nu + 1.0) * np.log(variance)
                            - nu * np.log(2.0) - m ** 2 / (2.0 * variance) - sp.gammaln(nu + 1.0))
    return float(out[0]) if shape == () else out.reshape(shape)


def bessel_transition_density(t: float, x0: float, x, params: BesselParams):
    """
    Transition density p^δ_t(x0, x) of the generalized Bessel process.

    Parameters:
    ----------
    t : float
        Elapsed time, t > 0.
    x0 : float
        Starting point, x0 ≥ 0.
    x : float or array_like
        End point(s); the density is 0 for x < 0.
    params : BesselParams
        Dimension δ, rate a and amplitude σ.

    Returns:
    -------
    float or np.ndarray
        Density values.
    """
    values = np.exp(bessel_transition_log_density(t, x0, x, params))
    return float(values) if np.ndim(values) == 0 else values


def bessel_transition_cdf(t: float, x0: float, x, params: BesselParams):
    """CDF of R(t) given R(0) = x0, from the noncentral χ² law of R(t)²/ρ(t)."""
    _check_time(t)
    variance = rho(t, params.ou)
    m = x0 * np.exp(-params.a * t)
    x = np.maximum(np.asarray(x, dtype=float), 0.0)
    if m == 0:
        values = stats.chi.cdf(x, params.delta, scale=np.sqrt(variance))
    else:
        values = stats.ncx2.cdf(x ** 2 / variance, params.delta, m ** 2 / variance)
    return float(values) if np.ndim(values) == 0 else values


def bessel_stationary_density(x, params: BesselParams):
    """
    Stationary density p^δ_∞: the χ_δ law scaled by √ρ(∞).

    Written as 2^{1-δ/2} ρ(∞)^{-δ/2} x^{δ-1} e^{-x²/2ρ(∞)} / Γ(δ/2) so that it
    integrates to one for every (a, σ).
    """
    x = np.asarray(x, dtype=float)
    shape = x.shape
    x = np.atleast_1d(x)
    out = np.full(x.shape, -np.inf)
    inside = x >= 0
    with np.errstate(divide="ignore", invalid="ignore"):
        out[inside] = _log_density_from_origin(x[inside], params.rho_inf, params.delta)
    values = np.exp(out)
    return float(values[0]) if shape == () else values.reshape(shape)


def bessel_stationary_cdf(x, params: BesselParams):
    values = stats.chi.cdf(np.maximum(x, 0.0), params.delta, scale=np.sqrt(params.rho_inf))
    return float(values) if np.ndim(values) == 0 else values


def draw_bessel_transition(m, variance: float, delta, rng: np.random.Generator) -> np.ndarray:
    """
    Poisson-Gamma draw of a Bessel endpoint with drifted start `m`.

    K ~ Poisson(m²/2ρ), G ~ Gamma(δ/2 + K, scale 2ρ), result √G. `m` and
    `delta` broadcast, so each entry may carry its own dimension.
    """
    m = np.asarray(m, dtype=float)
    delta = np.asarray(delta, dtype=float)
    shape = np.broadcast(m, delta).shape
    counts = rng.poisson(np.broadcast_to(m ** 2 / (2.0 * variance), shape))
    return np.sqrt(rng.gamma(delta / 2.0 + counts, 2.0 * variance, size=shape))


def bessel_sample_step(x0, dt: float, params: BesselParams, rng: np.random.Generator):
    """
    Exact one-step draw of the generalized Bessel process.

    The square of the process moves by the noncentral χ² kernel, drawn as a
    Poisson mixture of Gamma variables; no discretization is involved.
    """
    _check_time(dt, "dt")
    x0 = np.asarray(x0, dtype=float)
    if np.any(x0 < 0):
        raise DomainError(f"Bessel starting point must be nonnegative, got x0={x0}")
    values = draw_bessel_transition(x0 * np.exp(-params.a * dt), rho(dt, params.ou), params.delta, rng)
    return float(values) if values.ndim == 0 else values


class BesselKernel(TransitionKernel):

    def log_density(self, t, x0, x):
        return bessel_transition_log_density(t, x0, x, self.params)

    def sample_step(self, x0, dt, rng):
        return bessel_sample_step(x0, dt, self.params, rng)

    def stationary_density(self, x):
        return bessel_stationary_density(x, self.params)

    def cdf(self, t, x0, x):
        return bessel_transition_cdf(t, x0, x, self.params)

    @property
    def support(self):
        return (0.0, np.inf)


def make_kernel(kind: str, params) -> TransitionKernel:
    """Builds the kernel named `kind` ('ou' or 'bessel')."""
    if kind == "ou":
        return OUKernel(params.ou if isinstance(params, BesselParams) else params)
    if kind == "bessel":
        if not isinstance(params, BesselParams):
            raise DomainError("the bessel kernel needs BesselParams")
        return BesselKernel(params)
    raise DomainError(f"unknown kernel kind '{kind}', expected 'ou' or 'bessel'")
