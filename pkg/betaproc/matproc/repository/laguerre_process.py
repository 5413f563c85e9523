from dataclasses import replace

import numpy as np
from loguru import logger

from betaproc.errors import DomainError
from betaproc.kernels.domain import OUParams, rho
from betaproc.kernels.repository import draw_bessel_transition
from betaproc.matproc.domain import BidiagonalMatrix, LaguerreProcessState


def laguerre_init(n: int, beta: float, a: float, seed=None,
                  clock: OUParams = OUParams()) -> LaguerreProcessState:
    """
    The β-Laguerre process started from the zero matrix at t = 0.

    Raises:
    -------
    DomainError
        If a ≤ -1, since the last diagonal dimension (a+1)β must be positive.
    """
    entries = BidiagonalMatrix(np.zeros(n), np.zeros(max(n - 1, 0)))
    return LaguerreProcessState(n=n, beta=beta, a=a, t=0.0, entries=entries,
                                rng=np.random.default_rng(seed), clock=clock)


def laguerre_step(state: LaguerreProcessState, dt: float) -> LaguerreProcessState:
    """
    Advances each entry of L by its Bessel kernel over `dt`.

    Every entry is √β times a generalized Bessel coordinate; diagonal
    variates are drawn before superdiagonal ones.
    """
    if not dt > 0:
        raise DomainError(f"dt must be positive, got {dt}")
    root_beta = np.sqrt(state.beta)
    decay = np.exp(-state.clock.a * dt)
    variance = rho(dt, state.clock)
    diag = draw_bessel_transition(root_beta * state.entries.diag * decay, variance,
                                  state.diag_dimensions, state.rng)
    superdiag = draw_bessel_transition(root_beta * state.entries.superdiag * decay, variance,
                                       state.superdiag_dimensions, state.rng)
    logger.debug(f"laguerre step n={state.n} beta={state.beta} a={state.a} t={state.t}->{state.t + dt}")
    entries = BidiagonalMatrix(diag / root_beta, superdiag / root_beta)
    return replace(state, t=state.t + dt, entries=entries)


def stationary_laguerre_entries(n: int, beta: float, a: float, rng: np.random.Generator,
                                clock: OUParams = OUParams()) -> BidiagonalMatrix:
    """A draw from the stationary β-Laguerre ensemble scaled by ρ(∞)."""
    scale = np.sqrt(clock.rho_inf / beta)
    diag = scale * np.sqrt(rng.chisquare(beta * (a + np.arange(n, 0, -1, dtype=float))))
    superdiag = scale * np.sqrt(rng.chisquare(beta * np.arange(n - 1, 0, -1, dtype=float)))
    return BidiagonalMatrix(diag, superdiag)
