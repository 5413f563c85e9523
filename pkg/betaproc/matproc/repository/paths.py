import numpy as np

from betaproc.errors import DomainError
from betaproc.matproc.domain import HermiteProcessState, LaguerreProcessState
from .hermite_process import hermite_step
from .laguerre_process import laguerre_step


def geometric_time_grid(t_max: float, count: int, t_min: float = 1e-3) -> np.ndarray:
    """`count` times spaced geometrically on [t_min, t_max], dense where ρ moves fastest."""
    if not 0 < t_min <= t_max or count < 1:
        raise DomainError(f"invalid grid t_min={t_min}, t_max={t_max}, count={count}")
    return np.geomspace(t_min, t_max, count)


def advance_to(state, t: float):
    """Moves `state` forward to time t with one exact step."""
    if t < state.t:
        raise DomainError(f"cannot step backwards from t={state.t} to t={t}")
    if t == state.t:
        return state
    if isinstance(state, HermiteProcessState):
        return hermite_step(state, t - state.t)
    if isinstance(state, LaguerreProcessState):
        return laguerre_step(state, t - state.t)
    raise DomainError(f"unsupported process state {type(state).__name__}")


def sample_path(state, times) -> list:
    """
    States at each time of an increasing grid.

    The kernels are exact, so the path has no discretization error on any
    grid; consecutive states share the random stream of `state`.
    """
    times = np.asarray(times, dtype=float)
    if times.ndim != 1 or np.any(np.diff(times) <= 0):
        raise DomainError(f"times must be strictly increasing, got {times}")
    path = []
    for time in times:
        state = advance_to(state, float(time))
        path.append(state)
    return path
