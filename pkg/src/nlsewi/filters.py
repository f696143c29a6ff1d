"""Low-pass filters tied to the time step and dyadic band projections.

The time stepper truncates its correction term at the cutoff frequency
``tau**-0.5``; the same radial profile also builds the dyadic band/below/above
projections used by the diagnostic suite. Two profiles are provided: a sharp
indicator (the default, and what the experiment presets use) and a smooth
C-infinity roll-off equal to 1 on [0, 1] and 0 on [2, inf).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .analysis import lp_norm
from .errors import ConfigurationError, UsageError
from .spectral import Field, Multiplier, Space, SpectralGrid

__all__ = [
    "ProfileKind",
    "CutoffProfile",
    "SHARP",
    "SMOOTH",
    "cutoff_frequency",
    "lowpass_filter",
    "ProjectionKind",
    "dyadic_projection",
    "dyadic_scales",
    "BernsteinReport",
    "bernstein_check",
]


class ProfileKind(enum.Enum):
    SHARP = "sharp"
    SMOOTH = "smooth"


@dataclass(frozen=True)
class CutoffProfile:
    """Radial cutoff profile chi: chi(r) = 1 for r <= 1, chi(r) = 0 for r >= 2.

    The sharp kind drops straight to 0 past r = 1; the smooth kind interpolates
    with the standard exp(-1/s) smooth step on (1, 2).
    """

    kind: ProfileKind

    def chi(self, r: np.ndarray) -> np.ndarray:
        r = np.asarray(r, dtype=np.float64)
        if self.kind is ProfileKind.SHARP:
            return np.where(r <= 1.0, 1.0, 0.0)
        out = np.zeros(r.shape)
        out[r <= 1.0] = 1.0
        mid = (r > 1.0) & (r < 2.0)
        if np.any(mid):
            rm = r[mid]
            g_hi = np.exp(-1.0 / (2.0 - rm))
            g_lo = np.exp(-1.0 / (rm - 1.0))
            out[mid] = g_hi / (g_hi + g_lo)
        return out


SHARP = CutoffProfile(ProfileKind.SHARP)
SMOOTH = CutoffProfile(ProfileKind.SMOOTH)


def cutoff_frequency(tau: float) -> float:
    """Filter radius coupled to the time step: tau**-0.5."""
    if tau <= 0:
        raise ConfigurationError(f"tau must be positive, got {tau}")
    return tau**-0.5


def lowpass_filter(grid: SpectralGrid, tau: float, profile: CutoffProfile = SHARP) -> Multiplier:
    """Low-pass multiplier with symbol ``chi(sqrt(tau) * |mu|)``.

    For the sharp profile this keeps exactly the modes with
    ``|mu| <= tau**-0.5``. Composition obeys the narrower-filter identity: the
    symbol product of the tau-filter and the (tau/4)-filter equals the
    tau-filter exactly, for both profiles.
    """
    if tau <= 0:
        raise ConfigurationError(f"tau must be positive, got {tau}")
    return Multiplier(grid, profile.chi(math.sqrt(tau) * grid.mu_abs()))


class ProjectionKind(enum.Enum):
    BAND = "band"
    BELOW = "below"
    ABOVE = "above"


def dyadic_projection(
    grid: SpectralGrid,
    N: float,
    kind: ProjectionKind,
    profile: CutoffProfile = SHARP,
) -> Multiplier:
    """Frequency projection at scale N >= 1.

    BELOW has symbol ``chi(|mu|/N)``, BAND has ``chi(|mu|/(2N)) - chi(|mu|/N)``
    (supported in N < |mu| < 4N), and ABOVE is the complement of BELOW.
    """
    if N < 1:
        raise UsageError(f"dyadic scale must satisfy N >= 1, got {N}")
    mu = grid.mu_abs()
    if kind is ProjectionKind.BELOW:
        return Multiplier(grid, profile.chi(mu / N))
    if kind is ProjectionKind.BAND:
        return Multiplier(grid, profile.chi(mu / (2.0 * N)) - profile.chi(mu / N))
    if kind is ProjectionKind.ABOVE:
        return Multiplier(grid, 1.0 - profile.chi(mu / N))
    raise UsageError(f"unknown projection kind {kind!r}")


def dyadic_scales(grid: SpectralGrid) -> list[float]:
    """Powers of two from 1 up to the first one >= the per-axis Nyquist frequency.

    Summing BAND over these scales plus BELOW(1) telescopes to the identity on
    the grid: the top band reaches 2 * M_top >= sqrt(dim) * nyquist, which
    covers the corner modes for dim <= 3.
    """
    scales = [1.0]
    while scales[-1] < grid.nyquist:
        scales.append(2.0 * scales[-1])
    return scales


@dataclass
class BernsteinReport:
    """Measured norm-upgrade constants for the BELOW projection at one scale."""

    N: float
    p: float
    q: float
    trials: int
    ratios: list[float]

    @property
    def max_ratio(self) -> float:
        return max(self.ratios)


def bernstein_check(
    grid: SpectralGrid,
    N: float,
    p: float,
    q: float,
    trials: int,
    rng: np.random.Generator | None = None,
    profile: CutoffProfile = SHARP,
) -> BernsteinReport:
    """Measure ``|P_below(N) f|_p / (N^(d(1/q - 1/p)) |f|_q)`` over random fields.

    The ratio is bounded by a constant independent of N; callers sweep N
    geometrically and compare the reported maxima.
    """
    if not (1 <= q <= p):
        raise UsageError(f"exponents must satisfy 1 <= q <= p, got q={q}, p={p}")
    if trials < 1:
        raise UsageError("trials must be >= 1")
    if rng is None:
        rng = np.random.default_rng(0)

    below = dyadic_projection(grid, N, ProjectionKind.BELOW, profile)
    inv_q = 0.0 if math.isinf(q) else 1.0 / q
    inv_p = 0.0 if math.isinf(p) else 1.0 / p
    scale = N ** (grid.dim * (inv_q - inv_p))

    ratios = []
    for _ in range(trials):
        values = rng.standard_normal(grid.shape) + 1j * rng.standard_normal(grid.shape)
        f = Field(grid, values, Space.PHYSICAL)
        projected = Field(grid, np.fft.ifftn(below.symbol * np.fft.fftn(values)), Space.PHYSICAL)
        denom = scale * lp_norm(f, q)
        ratios.append(lp_norm(projected, p) / denom)
    return BernsteinReport(N=N, p=p, q=q, trials=trials, ratios=ratios)
