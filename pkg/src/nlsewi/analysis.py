"""Grid norms, discrete space-time norms, error tables, and order fitting."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import UsageError
from .spectral import Field, Space, as_fourier, sobolev_weight

__all__ = [
    "lp_norm",
    "sobolev_norm",
    "spacetime_norm",
    "AdmissiblePair",
    "is_admissible",
    "ErrorSample",
    "OrderFit",
    "fit_order",
    "fit_loglog",
]

# Relative gap below which two consecutive errors count as one saturated plateau.
PLATEAU_GAP = 0.05


def lp_norm(f: Field, r: float) -> float:
    """Discrete L^r norm ``(h^d * sum |f_j|^r)^(1/r)``; r = inf gives max |f_j|."""
    if f.space is not Space.PHYSICAL:
        raise UsageError("lp_norm expects a physical-space field")
    if r < 1:
        raise ValueError(f"Lebesgue exponent must satisfy r >= 1, got {r}")
    mags = np.abs(f.values)
    if math.isinf(r):
        return float(mags.max())
    hd = f.grid.spacing**f.grid.dim
    if r == 2:
        return float(math.sqrt(hd * float(np.sum(mags**2))))
    return float((hd * float(np.sum(mags**r))) ** (1.0 / r))


def sobolev_norm(f: Field, s: float) -> float:
    """H^s norm: L^2 norm of the field weighted by ``(1+|mu|^2)^(s/2)`` in Fourier space."""
    fhat = as_fourier(f)
    weight = sobolev_weight(f.grid, s).symbol
    hd = f.grid.spacing**f.grid.dim
    total = float(np.sum(weight**2 * (fhat.values.real**2 + fhat.values.imag**2)))
    return math.sqrt(hd * total / f.grid.point_count)


def spacetime_norm(samples: Sequence[Field], q: float, r: float, tau: float) -> float:
    """Discrete-in-time norm ``(tau * sum_k |f^k|_r^q)^(1/q)``; q = inf gives the sup."""
    if len(samples) == 0:
        raise ValueError("spacetime_norm needs at least one snapshot")
    if q < 1:
        raise ValueError(f"time exponent must satisfy q >= 1, got {q}")
    if tau <= 0:
        raise ValueError(f"tau must be positive, got {tau}")
    norms = [lp_norm(f, r) for f in samples]
    if math.isinf(q):
        return max(norms)
    return float((tau * sum(v**q for v in norms)) ** (1.0 / q))


def is_admissible(q: float, r: float, d: int, tol: float = 1e-12) -> bool:
    """Whether (q, r) satisfies ``2/q = d*(1/2 - 1/r)`` on [2, inf], excluding (2, inf, 2)."""
    if not (2 <= q <= math.inf and 2 <= r <= math.inf):
        return False
    if q == 2 and math.isinf(r) and d == 2:
        return False
    lhs = 0.0 if math.isinf(q) else 2.0 / q
    rhs = d * (0.5 - (0.0 if math.isinf(r) else 1.0 / r))
    return abs(lhs - rhs) <= tol


@dataclass(frozen=True)
class AdmissiblePair:
    """A validated Strichartz exponent pair for dimension d."""

    q: float
    r: float
    d: int

    def __post_init__(self):
        if not is_admissible(self.q, self.r, self.d):
            raise ValueError(f"({self.q}, {self.r}) is not admissible in dimension {self.d}")


@dataclass
class ErrorSample:
    """Errors of one run at final time for a single time step tau."""

    tau: float
    e_l2: float
    e_h1: float
    extras: dict = field(default_factory=dict)
    filter_identity: bool = False


@dataclass
class OrderFit:
    """Least-squares slope of log(error) against log(tau)."""

    fitted_order: float
    intercept: float
    residual: float
    used: list[ErrorSample]
    dropped: list[ErrorSample]


def fit_loglog(taus: Sequence[float], errors: Sequence[float]) -> tuple[float, float, float]:
    """Slope, intercept, and RMS log-space residual of a power-law fit."""
    lt = np.log(np.asarray(taus, dtype=float))
    le = np.log(np.asarray(errors, dtype=float))
    slope, intercept = np.polyfit(lt, le, 1)
    residual = float(np.sqrt(np.mean((le - (slope * lt + intercept)) ** 2)))
    return float(slope), float(intercept), residual


def _drop_plateau(samples: list[ErrorSample], errors: list[float]) -> int:
    """Index where the error table saturates, or len(samples) if it never does.

    Samples are ordered by decreasing tau. Once two consecutive errors differ
    by less than PLATEAU_GAP (relative), that sample and everything finer sit
    on the spatial-error floor and are excluded from the fit.
    """
    for i in range(len(samples) - 1):
        if abs(errors[i] - errors[i + 1]) < PLATEAU_GAP * max(errors[i], errors[i + 1]):
            return i
    return len(samples)


def fit_order(samples: Sequence[ErrorSample], which: str = "l2") -> OrderFit:
    """Fit the convergence order of the chosen error column ("l2" or "h1").

    Requires at least three samples with distinct tau and positive errors.
    Saturated samples (see PLATEAU_GAP) are excluded and reported as dropped.
    """
    if which not in ("l2", "h1"):
        raise ValueError(f"which must be 'l2' or 'h1', got {which!r}")
    samples = sorted(samples, key=lambda s: -s.tau)
    taus = [s.tau for s in samples]
    if len(samples) < 3 or len(set(taus)) != len(taus):
        raise ValueError("fit_order needs at least 3 samples with distinct tau")
    errors = [s.e_l2 if which == "l2" else s.e_h1 for s in samples]
    if any(e <= 0 for e in errors):
        raise ValueError("fit_order needs strictly positive errors")

    cut = _drop_plateau(list(samples), errors)
    used, dropped = list(samples[:cut]), list(samples[cut:])
    if len(used) < 2:
        raise ValueError("all samples sit on the saturation plateau; nothing to fit")
    slope, intercept, residual = fit_loglog([s.tau for s in used], errors[:cut])
    return OrderFit(slope, intercept, residual, used, dropped)
