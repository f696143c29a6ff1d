"""Construction of singular and bounded potentials, and the regularity/order tables.

Singular potentials are defined through their Fourier coefficients and
synthesized directly on the grid:

* the 1D periodic delta comb, a truncated flat series folded onto grid modes
  (the fold is exact at grid points, so a reference truncation far beyond the
  grid costs only O(n) extra work);
* power-law symbols ``-(2L)^-d |mu_l|^-gamma`` over the grid's own nonzero
  modes in 2D/3D.

The regularity tables map the Lebesgue exponent p of the potential to the
solution's regularity-loss exponent and to the predicted L^2 convergence order
of the integrator.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from .errors import ConfigurationError, UsageError
from .spectral import Field, Space, SpectralGrid, synthesize

__all__ = [
    "PotentialKind",
    "PotentialSpec",
    "delta_series_potential",
    "power_law_potential",
    "sampled_potential",
    "gaussian_well",
    "Rate",
    "regularity_loss",
    "predicted_order",
    "sigma_window",
    "RegularityClass",
]


class Rate(NamedTuple):
    """A convergence/regularity exponent, possibly an open endpoint.

    ``strict`` marks rates stated up to an arbitrarily small loss (the
    "1-minus" kind) or gain ("1/2-plus"); the direction follows from context.
    """

    value: float
    strict: bool = False


def delta_series_potential(
    grid: SpectralGrid, n_ref: int, sign: float = -1.0, aliasing: str = "fold"
) -> Field:
    """Truncated periodic delta comb ``sign/(2L) * sum_{|l| <= n_ref} exp(i mu_l x)``.

    Two on-grid realizations are provided; they coincide while n_ref fits
    inside the grid's mode set and differ once it does not:

    * ``"fold"`` reproduces the *samples* of the truncated series at grid
      points: coefficients with ``l = k (mod n)`` alias exactly onto grid mode
      k, so they are folded before a single inverse transform. This matches
      the Dirichlet-kernel closed form pointwise, but for n_ref >> n the fold
      inflates the comb's strength by roughly 2*n_ref/n.
    * ``"restrict"`` is the spectral projection of the series onto the grid's
      own modes (coefficient sign/(2L) wherever |l| <= n_ref). Pointwise
      products against it reproduce the exact point-interaction action on
      band-limited fields, which is what the convergence experiments need.

    Either way the result is real up to roundoff (conjugate-symmetric sum).
    """
    if grid.dim != 1:
        raise UsageError("the delta series potential is one-dimensional")
    if n_ref < 1:
        raise ConfigurationError(f"n_ref must be >= 1, got {n_ref}")
    signed = np.rint(grid.frequencies * grid.half_width / np.pi).astype(np.int64)
    if aliasing == "fold":
        counts = (n_ref - signed) // grid.n + (n_ref + signed) // grid.n + 1
    elif aliasing == "restrict":
        counts = (np.abs(signed) <= n_ref).astype(np.int64)
    else:
        raise ConfigurationError(f"aliasing must be 'fold' or 'restrict', got {aliasing!r}")
    coeffs = sign / (2.0 * grid.half_width) * counts.astype(np.float64)
    return synthesize(grid, coeffs)


def power_law_potential(grid: SpectralGrid, gamma: float, sign: float = -1.0) -> Field:
    """Potential with Fourier coefficients ``sign*(2L)^-d * |mu_l|^-gamma`` on nonzero grid modes."""
    if grid.dim == 1:
        raise UsageError("power-law symbols are used in 2D/3D; use the delta series in 1D")
    if gamma <= 0:
        raise ConfigurationError(f"gamma must be positive, got {gamma}")
    mu2 = grid.mu_abs2()
    origin = (0,) * grid.dim
    with np.errstate(divide="ignore"):
        coeffs = sign * (2.0 * grid.half_width) ** (-grid.dim) * np.power(mu2, -0.5 * gamma)
    coeffs[origin] = 0.0
    return synthesize(grid, coeffs)


def sampled_potential(grid: SpectralGrid, fn: Callable[..., np.ndarray]) -> Field:
    """Potential sampled from a closed-form function of the coordinates."""
    values = np.broadcast_to(fn(*grid.coordinate_meshes()), grid.shape)
    return Field(grid, np.asarray(values, dtype=np.complex128), Space.PHYSICAL)


def gaussian_well(depth: float = 1.0, width: float = 1.0) -> Callable[..., np.ndarray]:
    """Smooth bounded well ``-depth * exp(-|x|^2 / (2 width^2))``."""

    def fn(*coords):
        r2 = sum(c**2 for c in coords)
        return -depth * np.exp(-r2 / (2.0 * width**2))

    return fn


class PotentialKind(enum.Enum):
    NONE = "none"
    DELTA_SERIES_1D = "delta_series_1d"
    POWER_SYMBOL = "power_symbol"
    SMOOTH_BOUNDED = "smooth_bounded"


@dataclass(frozen=True)
class PotentialSpec:
    """Declarative description of a potential, buildable on any matching grid."""

    kind: PotentialKind
    n_ref: int | None = None
    gamma: float | None = None
    sign: float = -1.0
    sample_fn: Callable[..., np.ndarray] | None = None
    aliasing: str = "fold"

    def __post_init__(self):
        if self.kind is PotentialKind.DELTA_SERIES_1D and (self.n_ref is None or self.n_ref < 1):
            raise ConfigurationError("delta series potential needs n_ref >= 1")
        if self.kind is PotentialKind.POWER_SYMBOL and (self.gamma is None or self.gamma <= 0):
            raise ConfigurationError("power-law potential needs gamma > 0")
        if self.kind is PotentialKind.SMOOTH_BOUNDED and self.sample_fn is None:
            raise ConfigurationError("smooth bounded potential needs a sample function")

    def build(self, grid: SpectralGrid) -> Field | None:
        if self.kind is PotentialKind.NONE:
            return None
        if self.kind is PotentialKind.DELTA_SERIES_1D:
            return delta_series_potential(grid, self.n_ref, self.sign, self.aliasing)
        if self.kind is PotentialKind.POWER_SYMBOL:
            return power_law_potential(grid, self.gamma, self.sign)
        return sampled_potential(grid, self.sample_fn)


def _check_exponent(p: float, d: int):
    if d not in (1, 2, 3):
        raise ValueError(f"dimension must be in {{1, 2, 3}}, got {d}")
    if p < 1 or p <= d / 2:
        raise ValueError(
            f"p={p} is outside the admissible range (p >= 1 and p > d/2 = {d / 2}); "
            "the equation is ill-posed below it"
        )


def regularity_loss(p: float, d: int) -> Rate:
    """Loss exponent of the solution regularity for an L^p potential in dimension d.

    Returns 0 for p >= 2 (the H^2 regime). For d/2 < p < 2 the loss is
    ``d*(1/p - 1/2)``; the 1D endpoint p = 1 returns the open bound 1/2-plus.
    """
    _check_exponent(p, d)
    if p >= 2:
        return Rate(0.0)
    if d == 1 and p == 1:
        return Rate(0.5, strict=True)
    return Rate(d * (1.0 / p - 0.5))


def predicted_order(p: float, d: int) -> Rate:
    """Predicted L^2-norm convergence order of the integrator for an L^p potential."""
    alpha = regularity_loss(p, d)
    if p > 2:
        return Rate(1.0)
    if d == 1:
        if p == 1:
            return Rate(0.5, strict=True)
        return Rate(1.0 - alpha.value)
    if d == 2:
        return Rate(1.0 - alpha.value, strict=True)
    return Rate(1.0 - 1.5 * alpha.value, strict=True)


def sigma_window(p: float, d: int) -> tuple[float, float]:
    """Admissible nonlinearity powers (lo, hi) for which the error bounds extend.

    The lower bound ``(1 - alpha)/2`` keeps the power nonlinearity compatible
    with the solution regularity; the upper bound is finite only for strongly
    singular potentials in 2D/3D.
    """
    alpha = regularity_loss(p, d)
    lo = (1.0 - alpha.value) / 2.0
    if d == 2 and 1 < p < 4.0 / 3.0:
        return lo, 3.0 / (4.0 - 3.0 * p)
    if d == 3 and 1.5 < p < 9.0 / 5.0:
        return lo, 3.0 / (18.0 - 10.0 * p)
    return lo, math.inf


@dataclass(frozen=True)
class RegularityClass:
    """Potential Lebesgue exponent together with its derived loss exponent."""

    p: float
    dim: int

    def __post_init__(self):
        _check_exponent(self.p, self.dim)

    @property
    def alpha(self) -> Rate:
        return regularity_loss(self.p, self.dim)

    @property
    def order(self) -> Rate:
        return predicted_order(self.p, self.dim)
