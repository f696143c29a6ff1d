"""Filtered exponential-integrator time stepping for the periodic NLS equation.

One step advances ``i d/dt psi = -Lap psi + V psi + beta |psi|^(2 sigma) psi``
by treating the Laplacian exactly and the potential/nonlinear term through the
phi1 kernel, with the correction low-passed at the step-coupled cutoff
``tau**-0.5``:

    psi_next = exp(i tau Lap) psi
               - i tau phi1(i tau Lap) lowpass(V psi + beta |psi|^(2 sigma) psi)

and the initial state is the low-passed initial datum. Products are formed
pointwise in physical space; each step costs one forward and one inverse
transform. With the sharp profile the iterates stay band-limited to the cutoff.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Sequence

import numpy as np

from .errors import ConfigurationError, InstabilityError, UsageError
from .filters import SHARP, CutoffProfile, lowpass_filter
from .spectral import Field, Multiplier, Space, SpectralGrid, phi1

__all__ = [
    "SchrodingerProblem",
    "StepperState",
    "Trajectory",
    "init_state",
    "ewi_step",
    "run",
    "step_count",
    "filtered_propagator",
    "ExactSoliton",
    "FineStep",
    "reference_solution",
    "soliton_initial",
    "soliton_solution",
]

# Abort once the sup norm exceeds this multiple of its initial value.
BLOWUP_FACTOR = 1e6


@dataclass
class SchrodingerProblem:
    """Problem data: grid, real potential (or None), nonlinearity, initial datum, final time."""

    grid: SpectralGrid
    potential: Field | None
    beta: float
    initial: Field
    final_time: float
    sigma: float = 1.0

    def __post_init__(self):
        if self.final_time <= 0:
            raise ConfigurationError(f"final_time must be positive, got {self.final_time}")
        if self.sigma <= 0:
            raise ConfigurationError(f"sigma must be positive, got {self.sigma}")
        if self.initial.space is not Space.PHYSICAL or self.initial.grid != self.grid:
            raise UsageError("initial datum must be a physical-space field on the problem grid")
        if self.potential is not None:
            if self.potential.space is not Space.PHYSICAL or self.potential.grid != self.grid:
                raise UsageError("potential must be a physical-space field on the problem grid")
            scale = float(np.abs(self.potential.values).max())
            if scale > 0 and float(np.abs(self.potential.values.imag).max()) > 1e-9 * scale:
                raise UsageError("potential must be real-valued")


@dataclass
class StepperState:
    """One trajectory's state: current iterate plus step-size-bound multipliers."""

    problem: SchrodingerProblem
    tau: float
    profile: CutoffProfile
    step_index: int
    psi: np.ndarray
    psi_hat: np.ndarray
    free_flight: np.ndarray = field(repr=False)
    kick: np.ndarray = field(repr=False)
    potential_values: np.ndarray | None = field(repr=False)
    initial_sup: float = 0.0

    @property
    def time(self) -> float:
        return self.step_index * self.tau

    @property
    def current(self) -> Field:
        return Field(self.problem.grid, self.psi, Space.PHYSICAL)


def init_state(
    problem: SchrodingerProblem, tau: float, profile: CutoffProfile = SHARP
) -> StepperState:
    """Low-pass the initial datum and cache the step multipliers."""
    if tau <= 0 or tau > problem.final_time:
        raise ConfigurationError(
            f"tau must lie in (0, final_time]; got tau={tau}, final_time={problem.final_time}"
        )
    grid = problem.grid
    mu2 = grid.mu_abs2()
    cutoff = lowpass_filter(grid, tau, profile).symbol
    free_flight = np.exp(-1j * tau * mu2)
    kick = phi1(-1j * tau * mu2) * cutoff

    psi_hat = cutoff * np.fft.fftn(problem.initial.values)
    psi = np.fft.ifftn(psi_hat)
    potential = None if problem.potential is None else problem.potential.values.real
    return StepperState(
        problem=problem,
        tau=tau,
        profile=profile,
        step_index=0,
        psi=psi,
        psi_hat=psi_hat,
        free_flight=free_flight,
        kick=kick,
        potential_values=potential,
        initial_sup=float(np.abs(psi).max()),
    )


def ewi_step(state: StepperState) -> StepperState:
    """Advance one step; raises InstabilityError on non-finite or exploding values."""
    problem = state.problem
    psi = state.psi
    nonlinear = problem.beta != 0.0

    if state.potential_values is None and not nonlinear:
        psi_hat_next = state.free_flight * state.psi_hat
    else:
        if state.potential_values is not None:
            w = state.potential_values * psi
        else:
            w = np.zeros_like(psi)
        if nonlinear:
            amp2 = psi.real**2 + psi.imag**2
            if problem.sigma == 1.0:
                w = w + problem.beta * amp2 * psi
            else:
                w = w + problem.beta * amp2**problem.sigma * psi
        psi_hat_next = state.free_flight * state.psi_hat - (1j * state.tau) * (
            state.kick * np.fft.fftn(w)
        )
    psi_next = np.fft.ifftn(psi_hat_next)

    next_index = state.step_index + 1
    if not np.all(np.isfinite(psi_hat_next)):
        raise InstabilityError(next_index, "non-finite values in the iterate")
    sup = float(np.abs(psi_next).max())
    if state.initial_sup > 0 and sup > BLOWUP_FACTOR * state.initial_sup:
        raise InstabilityError(
            next_index, f"sup norm grew by {sup / state.initial_sup:.3e} over the initial datum"
        )
    return replace(state, step_index=next_index, psi=psi_next, psi_hat=psi_hat_next)


def step_count(total_time: float, tau: float) -> int:
    """Number of tau-steps covering total_time; rejects non-divisors."""
    if tau <= 0:
        raise ConfigurationError(f"tau must be positive, got {tau}")
    ratio = total_time / tau
    steps = round(ratio)
    if steps < 1 or abs(ratio - steps) >= 1e-9:
        raise ConfigurationError(f"tau={tau} does not divide T={total_time} into whole steps")
    return steps


@dataclass
class Trajectory:
    """Result of a full run: final field plus any requested snapshots."""

    final: Field
    snapshots: dict[float, Field]
    tau: float
    steps: int


def run(
    problem: SchrodingerProblem,
    tau: float,
    profile: CutoffProfile = SHARP,
    snapshot_times: Sequence[float] = (),
    on_step: Callable[[StepperState], None] | None = None,
) -> Trajectory:
    """Integrate to the final time, storing snapshots at requested step multiples.

    Snapshot times must be whole multiples of tau (no time interpolation). If
    given, ``on_step`` is called on the initial state and after every step,
    for streaming diagnostics.
    """
    steps = step_count(problem.final_time, tau)
    wanted: dict[int, float] = {}
    for t in snapshot_times:
        k = round(t / tau)
        if abs(t / tau - k) >= 1e-9 or not (0 <= k <= steps):
            raise ConfigurationError(f"snapshot time {t} is not a step multiple within the run")
        wanted[k] = t

    state = init_state(problem, tau, profile)
    if on_step is not None:
        on_step(state)
    snapshots: dict[float, Field] = {}
    if 0 in wanted:
        snapshots[wanted[0]] = state.current.copy()
    for _ in range(steps):
        state = ewi_step(state)
        if on_step is not None:
            on_step(state)
        if state.step_index in wanted:
            snapshots[wanted[state.step_index]] = state.current.copy()
    return Trajectory(final=state.current, snapshots=snapshots, tau=tau, steps=steps)


def filtered_propagator(
    grid: SpectralGrid, t: float, tau: float, profile: CutoffProfile = SHARP
) -> Multiplier:
    """Free flight over time t composed with the quarter-step low-pass filter.

    Diagnostic operator for discrete space-time estimates; the stepper itself
    never applies it.
    """
    sym = np.exp(-1j * t * grid.mu_abs2()) * lowpass_filter(grid, tau / 4.0, profile).symbol
    return Multiplier(grid, sym)


def soliton_initial(grid: SpectralGrid) -> Field:
    """Stationary soliton pinned by the attractive delta potential (1D, beta = -1)."""
    if grid.dim != 1:
        raise UsageError("the soliton datum is one-dimensional")
    x = grid.coordinates()[0]
    values = math.sqrt(2.0) / np.cosh(np.abs(x) + math.atanh(0.5))
    return Field(grid, values.astype(np.complex128), Space.PHYSICAL)


def soliton_solution(grid: SpectralGrid, t: float) -> Field:
    """Exact evolution of the soliton datum: a pure phase ``exp(i t)``."""
    base = soliton_initial(grid)
    return Field(grid, np.exp(1j * t) * base.values, Space.PHYSICAL)


@dataclass(frozen=True)
class ExactSoliton:
    """Reference mode: closed-form soliton solution (1D delta-potential setup)."""


@dataclass(frozen=True)
class FineStep:
    """Reference mode: rerun the integrator with a much smaller step."""

    tau_ref: float

    def __post_init__(self):
        if self.tau_ref <= 0:
            raise ConfigurationError(f"tau_ref must be positive, got {self.tau_ref}")


def reference_solution(
    problem: SchrodingerProblem,
    times: Sequence[float],
    mode: ExactSoliton | FineStep,
    profile: CutoffProfile = SHARP,
) -> list[Field]:
    """Reference fields at the requested times, exact or fine-stepped.

    The exact mode is only valid for the 1D soliton configuration (checked
    against beta, sigma, and the initial datum); errors measured against it
    are unfiltered. The fine-step mode reruns the scheme at ``tau_ref`` with
    its own step-coupled filter.
    """
    if isinstance(mode, ExactSoliton):
        grid = problem.grid
        expected = soliton_initial(grid) if grid.dim == 1 else None
        matches = (
            grid.dim == 1
            and problem.beta == -1.0
            and problem.sigma == 1.0
            and float(np.abs(problem.initial.values - expected.values).max()) <= 1e-12
        )
        if not matches:
            raise UsageError(
                "exact soliton reference requires the 1D delta-potential setup "
                "(beta=-1, sigma=1, soliton initial datum)"
            )
        return [soliton_solution(grid, t) for t in times]
    traj = run(problem, mode.tau_ref, profile, snapshot_times=times)
    return [traj.snapshots[t] for t in times]
