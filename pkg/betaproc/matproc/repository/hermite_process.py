from dataclasses import replace

import numpy as np
from loguru import logger

from betaproc.kernels.domain import OUParams, rho
from betaproc.kernels.repository import draw_bessel_transition, ou_sample_step
from betaproc.matproc.domain import HermiteProcessState, JacobiMatrix


def hermite_init(n: int, beta: float, seed=None, clock: OUParams = OUParams()) -> HermiteProcessState:
    """
    The β-Hermite process started from the zero matrix at t = 0.

    Parameters:
    ----------
    n : int
        Matrix size, n ≥ 1.
    beta : float
        Any positive β.
    seed : int, SeedSequence or Generator, optional
        Source of the random stream consumed by `hermite_step`.
    clock : OUParams
        OU rate and amplitude shared by every entry.
    """
    entries = JacobiMatrix(np.zeros(n), np.zeros(max(n - 1, 0)))
    return HermiteProcessState(n=n, beta=beta, t=0.0, entries=entries,
                               rng=np.random.default_rng(seed), clock=clock)


def hermite_step(state: HermiteProcessState, dt: float) -> HermiteProcessState:
    """
    Advances every entry independently by its exact kernel over `dt`.

    The diagonal moves as OU coordinates √β a_i, the off-diagonal as Bessel
    coordinates √(2β) b_j of dimension (n-j)β. Diagonal variates are drawn
    before off-diagonal ones.
    """
    diag, offdiag = state.kernel_coordinates()
    new_diag = ou_sample_step(diag, dt, state.clock, state.rng)
    drifted = offdiag * np.exp(-state.clock.a * dt)
    new_offdiag = draw_bessel_transition(drifted, rho(dt, state.clock), state.offdiag_dimensions, state.rng)
    entries = JacobiMatrix(np.atleast_1d(new_diag) / np.sqrt(state.beta),
                           new_offdiag / np.sqrt(2.0 * state.beta))
    logger.debug(f"hermite step n={state.n} beta={state.beta} t={state.t}->{state.t + dt}")
    return replace(state, t=state.t + dt, entries=entries)


def stationary_hermite_entries(n: int, beta: float, rng: np.random.Generator,
                               clock: OUParams = OUParams()) -> JacobiMatrix:
    """
    A draw from the stationary β-Hermite ensemble scaled by ρ(∞).

    Diagonal N(0, ρ(∞)/β), off-diagonal j equal to √(ρ(∞)/2β) χ_{(n-j)β}.
    """
    scale = np.sqrt(clock.rho_inf / beta)
    diag = scale * rng.standard_normal(n)
    offdiag = scale / np.sqrt(2.0) * np.sqrt(rng.chisquare(beta * np.arange(n - 1, 0, -1, dtype=float)))
    return JacobiMatrix(diag, offdiag)
