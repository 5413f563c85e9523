from loguru import logger
from scipy import integrate

from betaproc.errors import QuadratureError


def integrate_quad(func, lower: float, upper: float, epsabs: float = 1e-10,
                   epsrel: float = 1e-10, limit: int = 200, **kwargs) -> float:
    """
    Adaptive Gauss-Kronrod quadrature that reports non-convergence.

    Extra keyword arguments (`weight`, `wvar`, `points`, `args`) are passed
    to `scipy.integrate.quad`.

    Raises:
    -------
    QuadratureError
        If QUADPACK flags the result and the error estimate exceeds
        the larger of the requested tolerances.
    """
    result = integrate.quad(func, lower, upper, epsabs=epsabs, epsrel=epsrel,
                            limit=limit, full_output=1, **kwargs)
    value, abserr = result[0], result[1]
    if len(result) > 3:
        tolerance = max(epsabs, epsrel * abs(value))
        if abserr > tolerance * 100:
            raise QuadratureError(
                f"quadrature on [{lower}, {upper}] did not converge: {result[3]} "
                f"(estimate {value}, error {abserr})"
            )
        logger.debug(f"quadrature warning on [{lower}, {upper}] accepted: error {abserr}")
    return float(value)
