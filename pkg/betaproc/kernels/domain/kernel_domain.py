from abc import ABC, abstractmethod

import numpy as np

from betaproc.errors import DomainError


class TransitionKernel(ABC):
    """
    A one-dimensional Markov transition kernel with an exact sampler.

    Attributes:
    ----------
    params : OUParams or BesselParams
        Parameters of the underlying process.
    """

    def __init__(self, params):
        self.params = params

    @abstractmethod
    def log_density(self, t: float, x0: float, x):
        """
        Log of the transition density p_t(x0, x). Must be implemented by subclasses.

        Parameters:
        ----------
        t : float
            Elapsed time, t > 0.
        x0 : float
            Starting point.
        x : float or array_like
            End point(s).
        """
        raise NotImplementedError

    def density(self, t: float, x0: float, x):
        values = np.exp(self.log_density(t, x0, x))
        return float(values) if np.ndim(values) == 0 else values

    @abstractmethod
    def sample_step(self, x0, dt: float, rng: np.random.Generator):
        """
        Draws X(t + dt) given X(t) = x0 from the exact kernel. Must be implemented by subclasses.
        """
        raise NotImplementedError

    @abstractmethod
    def stationary_density(self, x):
        """Density of the t → ∞ limit. Must be implemented by subclasses."""
        raise NotImplementedError

    @property
    @abstractmethod
    def support(self) -> tuple:
        """Lower and upper end of the state space."""
        raise NotImplementedError

    def sample_path(self, x0, times, rng: np.random.Generator) -> np.ndarray:
        """
        Exact samples at increasing `times` (the first time may be 0).

        Returns:
        -------
        np.ndarray
            Values at each time; the start value is not included unless
            times[0] == 0.
        """
        times = np.asarray(times, dtype=float)
        if times.ndim != 1 or np.any(np.diff(times) <= 0) or times[0] < 0:
            raise DomainError(f"times must be strictly increasing and nonnegative, got {times}")
        path = np.empty(times.shape + np.shape(x0))
        current, clock = x0, 0.0
        for index, time in enumerate(times):
            if time > clock:
                current = self.sample_step(current, time - clock, rng)
                clock = time
            path[index] = current
        return path
