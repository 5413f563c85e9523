import numpy as np
from scipy import stats

from betaproc.errors import DomainError
from betaproc.kernels.domain import OUParams, TransitionKernel, rho


def _check_time(t, name="t"):
    if not t > 0:
        raise DomainError(f"{name} must be positive, got {t}")


def ou_transition_log_density(t: float, x0: float, x, params: OUParams = OUParams()):
    """Log of the Gaussian kernel with mean x0 e^{-at} and variance ρ(t)."""
    _check_time(t)
    mean = x0 * np.exp(-params.a * t)
    values = stats.norm.logpdf(x, loc=mean, scale=np.sqrt(rho(t, params)))
    return float(values) if np.ndim(values) == 0 else values


def ou_transition_density(t: float, x0: float, x, params: OUParams = OUParams()):
    """
    Transition density of the Ornstein-Uhlenbeck process.

    Parameters:
    ----------
    t : float
        Elapsed time, t > 0; t = inf gives the stationary N(0, ρ(∞)) density.
    x0 : float
        Starting point.
    x : float or array_like
        End point(s).
    params : OUParams
        Rate and amplitude.

    Returns:
    -------
    float or np.ndarray
        Density of N(x0 e^{-at}, ρ(t)) at x.
    """
    values = np.exp(ou_transition_log_density(t, x0, x, params))
    return float(values) if np.ndim(values) == 0 else values


def ou_stationary_density(x, params: OUParams = OUParams()):
    values = stats.norm.pdf(x, loc=0.0, scale=np.sqrt(params.rho_inf))
    return float(values) if np.ndim(values) == 0 else values


def ou_sample_step(x0, dt: float, params: OUParams, rng: np.random.Generator):
    """
    Exact one-step draw x0 e^{-a dt} + √ρ(dt) Z, Z ~ N(0, 1).

    `x0` may be an array; one normal variate is consumed per entry.
    """
    _check_time(dt, "dt")
    x0 = np.asarray(x0, dtype=float)
    noise = rng.standard_normal(x0.shape)
    values = x0 * np.exp(-params.a * dt) + np.sqrt(rho(dt, params)) * noise
    return float(values) if values.ndim == 0 else values


class OUKernel(TransitionKernel):

    def log_density(self, t, x0, x):
        return ou_transition_log_density(t, x0, x, self.params)

    def sample_step(self, x0, dt, rng):
        return ou_sample_step(x0, dt, self.params, rng)

    def stationary_density(self, x):
        return ou_stationary_density(x, self.params)

    @property
    def support(self):
        return (-np.inf, np.inf)
