"""Periodic spectral grids, discrete Fourier transforms, and diagonal multipliers.

Conventions used throughout the package:

* The domain is the periodic box ``(-L, L)^dim`` sampled at ``x_j = -L + j*h``
  per axis with spacing ``h = 2L/n``.
* Along each axis the signed mode indices run ``0, 1, ..., n/2-1, -n/2, ..., -1``
  (the standard transform layout) and mode ``l`` carries the angular frequency
  ``mu_l = pi*l/L``.
* The forward transform carries no scale factor and the inverse divides by
  ``n^dim`` (the plain FFT pair), so diagonal multipliers need no rescaling.
  The quadrature weight ``h^(dim/2)`` enters only in norm computations
  (see :mod:`nlsewi.analysis`).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigurationError, UsageError

__all__ = [
    "Space",
    "Direction",
    "SpectralGrid",
    "Field",
    "Multiplier",
    "make_grid",
    "transform",
    "as_fourier",
    "as_physical",
    "apply_multiplier",
    "laplacian_propagator",
    "phi1",
    "sobolev_weight",
    "gradient_weight",
    "synthesize",
    "coefficients_of",
]


class Space(enum.Enum):
    """Representation tag for field samples."""

    PHYSICAL = "physical"
    FOURIER = "fourier"


class Direction(enum.Enum):
    FORWARD = "forward"
    INVERSE = "inverse"


@dataclass(eq=False)
class SpectralGrid:
    """Uniform periodic grid on ``(-L, L)^dim`` with ``n`` points per axis."""

    dim: int
    half_width: float
    n: int
    _mu_abs2: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        if self.dim not in (1, 2, 3):
            raise ConfigurationError(f"dim must be in {{1, 2, 3}}, got {self.dim}")
        if not self.half_width > 0:
            raise ConfigurationError(f"half_width must be positive, got {self.half_width}")
        if self.n < 4 or self.n % 2 != 0:
            raise ConfigurationError(f"n must be an even integer >= 4, got {self.n}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SpectralGrid)
            and (self.dim, self.half_width, self.n) == (other.dim, other.half_width, other.n)
        )

    @property
    def spacing(self) -> float:
        """Grid spacing h = 2L/n."""
        return 2.0 * self.half_width / self.n

    @property
    def shape(self) -> tuple[int, ...]:
        return (self.n,) * self.dim

    @property
    def point_count(self) -> int:
        return self.n**self.dim

    @property
    def frequencies(self) -> np.ndarray:
        """Per-axis angular frequencies ``pi*l/L`` in transform index order."""
        return 2.0 * np.pi * np.fft.fftfreq(self.n, d=self.spacing)

    @property
    def nyquist(self) -> float:
        """Largest per-axis frequency magnitude, ``pi*(n/2)/L``."""
        return np.pi * (self.n // 2) / self.half_width

    @property
    def max_frequency(self) -> float:
        """Largest |mu| over the full grid (the corner mode), ``sqrt(dim)*nyquist``."""
        return math.sqrt(self.dim) * self.nyquist

    def coordinates(self) -> list[np.ndarray]:
        """Per-axis sample coordinates ``x_j = -L + j*h``."""
        x = -self.half_width + self.spacing * np.arange(self.n)
        return [x] * self.dim

    def coordinate_meshes(self) -> list[np.ndarray]:
        """Broadcast-ready coordinate arrays, one per axis."""
        return list(np.meshgrid(*self.coordinates(), indexing="ij", sparse=True))

    def frequency_meshes(self) -> list[np.ndarray]:
        """Broadcast-ready frequency arrays, one per axis, transform layout."""
        return list(np.meshgrid(*([self.frequencies] * self.dim), indexing="ij", sparse=True))

    def mu_abs2(self) -> np.ndarray:
        """Full |mu|^2 array on the grid (cached)."""
        if self._mu_abs2 is None:
            meshes = self.frequency_meshes()
            out = meshes[0] ** 2
            for m in meshes[1:]:
                out = out + m**2
            self._mu_abs2 = out.reshape(self.shape)
        return self._mu_abs2

    def mu_abs(self) -> np.ndarray:
        return np.sqrt(self.mu_abs2())


def make_grid(dim: int, half_width: float, n: int) -> SpectralGrid:
    """Build a periodic grid; rejects odd ``n``, ``n < 4``, and bad dimensions."""
    return SpectralGrid(dim, float(half_width), int(n))


@dataclass
class Field:
    """Complex samples on a grid, tagged as physical-space values or Fourier coefficients."""

    grid: SpectralGrid
    values: np.ndarray
    space: Space

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.complex128)
        if values.size != self.grid.point_count:
            raise UsageError(
                f"field has {values.size} values, grid has {self.grid.point_count} points"
            )
        self.values = np.ascontiguousarray(values.reshape(self.grid.shape))

    def copy(self) -> "Field":
        return Field(self.grid, self.values.copy(), self.space)

    def _check_compatible(self, other: "Field"):
        if self.grid != other.grid:
            raise UsageError("fields live on different grids")
        if self.space is not other.space:
            raise UsageError("fields live in different spaces")

    def __add__(self, other: "Field") -> "Field":
        self._check_compatible(other)
        return Field(self.grid, self.values + other.values, self.space)

    def __sub__(self, other: "Field") -> "Field":
        self._check_compatible(other)
        return Field(self.grid, self.values - other.values, self.space)

    def __mul__(self, scalar: complex) -> "Field":
        return Field(self.grid, self.values * scalar, self.space)

    __rmul__ = __mul__


@dataclass
class Multiplier:
    """A diagonal Fourier-space operator: a symbol sampled on grid frequencies."""

    grid: SpectralGrid
    symbol: np.ndarray

    def __post_init__(self):
        symbol = np.asarray(self.symbol)
        if symbol.size != self.grid.point_count:
            raise UsageError(
                f"symbol has {symbol.size} entries, grid has {self.grid.point_count} points"
            )
        self.symbol = np.ascontiguousarray(symbol.reshape(self.grid.shape))

    @classmethod
    def identity(cls, grid: SpectralGrid) -> "Multiplier":
        return cls(grid, np.ones(grid.shape))

    def __mul__(self, other: "Multiplier") -> "Multiplier":
        """Composition of diagonal operators (symbols multiply pointwise)."""
        if self.grid != other.grid:
            raise UsageError("multipliers live on different grids")
        return Multiplier(self.grid, self.symbol * other.symbol)


def transform(f: Field, direction: Direction) -> Field:
    """Move a field between physical space and Fourier space.

    Forward requires a physical-space field and applies the unscaled FFT;
    inverse requires Fourier coefficients and divides by ``n^dim``. A forward
    followed by an inverse reproduces the input to relative error <= 1e-13.
    """
    if direction is Direction.FORWARD:
        if f.space is not Space.PHYSICAL:
            raise UsageError("forward transform expects a physical-space field")
        return Field(f.grid, np.fft.fftn(f.values), Space.FOURIER)
    if direction is Direction.INVERSE:
        if f.space is not Space.FOURIER:
            raise UsageError("inverse transform expects a Fourier-space field")
        return Field(f.grid, np.fft.ifftn(f.values), Space.PHYSICAL)
    raise UsageError(f"unknown transform direction {direction!r}")


def as_fourier(f: Field) -> Field:
    return f if f.space is Space.FOURIER else transform(f, Direction.FORWARD)


def as_physical(f: Field) -> Field:
    return f if f.space is Space.PHYSICAL else transform(f, Direction.INVERSE)


def apply_multiplier(m: Multiplier, f: Field) -> Field:
    """Multiply Fourier coefficients by the symbol, entry by entry."""
    if m.grid != f.grid:
        raise UsageError("multiplier and field live on different grids")
    if f.space is not Space.FOURIER:
        raise UsageError("apply_multiplier expects a Fourier-space field")
    return Field(f.grid, m.symbol * f.values, Space.FOURIER)


def laplacian_propagator(grid: SpectralGrid, t: float) -> Multiplier:
    """Exact free-flight propagator over time t: symbol ``exp(-i*t*|mu|^2)``."""
    return Multiplier(grid, np.exp(-1j * t * grid.mu_abs2()))


# Taylor coefficients of (e^z - 1)/z: 1/(k+1)! for k = 0..8. Degree 8 keeps the
# truncation remainder below 1e-18 on |z| < 1e-2.
_PHI1_SERIES = [1.0 / math.factorial(k + 1) for k in range(9)]
_PHI1_SMALL = 1e-2


def phi1(z):
    """First exponential-integrator kernel ``(e^z - 1)/z`` with ``phi1(0) = 1``.

    Uses the quotient for |z| >= 1e-2 and a degree-8 Taylor series below it,
    avoiding cancellation near the removable singularity. Accepts scalars or
    arrays.
    """
    arr = np.asarray(z, dtype=np.complex128)
    small = np.abs(arr) < _PHI1_SMALL

    zs = np.where(small, arr, 0.0)
    series = np.full_like(arr, _PHI1_SERIES[-1])
    for c in reversed(_PHI1_SERIES[:-1]):
        series = series * zs + c

    zq = np.where(small, 1.0, arr)
    quotient = (np.exp(zq) - 1.0) / zq

    out = np.where(small, series, quotient)
    return complex(out) if np.isscalar(z) or arr.ndim == 0 else out


def sobolev_weight(grid: SpectralGrid, s: float) -> Multiplier:
    """Inhomogeneous weight with symbol ``(1 + |mu|^2)^(s/2)``."""
    return Multiplier(grid, np.power(1.0 + grid.mu_abs2(), 0.5 * s))


def gradient_weight(grid: SpectralGrid, s: float) -> Multiplier:
    """Homogeneous weight with symbol ``|mu|^s`` (zero mode mapped to 0); s >= 0."""
    if s < 0:
        raise UsageError("gradient_weight requires s >= 0 (zero mode is not invertible)")
    mu2 = grid.mu_abs2()
    with np.errstate(divide="ignore"):
        sym = np.power(mu2, 0.5 * s)
    if s > 0:
        sym[(0,) * grid.dim] = 0.0
    return Multiplier(grid, sym)


def _alternating_signs(grid: SpectralGrid) -> np.ndarray:
    """(-1)^(sum of per-axis indices): phase between x = -L sample order and the FFT."""
    axis = np.where(np.arange(grid.n) % 2 == 0, 1.0, -1.0)
    out = axis
    for _ in range(grid.dim - 1):
        out = np.multiply.outer(out, axis)
    return out


def synthesize(grid: SpectralGrid, coefficients: np.ndarray) -> Field:
    """Physical field ``f(x_j) = sum_l c_l exp(i mu_l . x_j)`` from transform-layout coefficients."""
    c = np.asarray(coefficients, dtype=np.complex128).reshape(grid.shape)
    values = np.fft.ifftn(c * _alternating_signs(grid)) * grid.point_count
    return Field(grid, values, Space.PHYSICAL)


def coefficients_of(f: Field) -> np.ndarray:
    """Inverse of :func:`synthesize`: coefficients c_l of a physical field, transform layout."""
    if f.space is not Space.PHYSICAL:
        raise UsageError("coefficients_of expects a physical-space field")
    return np.fft.fftn(f.values) * _alternating_signs(f.grid) / f.grid.point_count


