import numpy as np

from betaproc.special import integrate_quad
from .bessel_kernel import make_kernel


def stationarity_integral_check(t: float, x: float, params, kind: str = "bessel",
                                epsabs: float = 1e-10) -> float:
    """
    Integrates p_∞(x0) p_t(x0, x) over the starting point x0.

    For a stationary law the result equals p_∞(x). The range is truncated at
    12 standard deviations of the stationary law beyond |x|, where both
    factors are below double precision.

    Parameters:
    ----------
    t : float
        Elapsed time, t > 0.
    x : float
        End point.
    params : OUParams or BesselParams
        Process parameters; 'ou' accepts BesselParams and uses its (a, σ).
    kind : str
        'ou' or 'bessel'.

    Returns:
    -------
    float
        The integral.

    Raises:
    -------
    QuadratureError
        If the adaptive quadrature does not converge.
    """
    kernel = make_kernel(kind, params)
    reach = 12.0 * np.sqrt(kernel.params.rho_inf) + abs(x)
    lower = -reach if kind == "ou" else 0.0

    def integrand(x0):
        return kernel.stationary_density(x0) * kernel.density(t, x0, x)

    return integrate_quad(integrand, lower, reach, epsabs=epsabs)
