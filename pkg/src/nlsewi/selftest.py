"""Fast structural self-checks: operator identities, bounds, and oracle cross-checks.

Everything here runs in seconds on small grids and is deterministic for a
fixed seed. Each check measures a quantity with a known bound (exact algebraic
identities, unitarity, norm-boundedness probes on random fields) and reports
pass/fail against a frozen threshold.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .analysis import ErrorSample, fit_order, lp_norm, sobolev_norm
from .filters import (
    SHARP,
    SMOOTH,
    ProjectionKind,
    bernstein_check,
    dyadic_projection,
    dyadic_scales,
    lowpass_filter,
)
from .integrator import SchrodingerProblem, run
from .potentials import delta_series_potential
from .spectral import (
    Field,
    Space,
    apply_multiplier,
    gradient_weight,
    laplacian_propagator,
    make_grid,
    phi1,
)

__all__ = ["CheckResult", "SelftestReport", "run_selftest"]


@dataclass
class CheckResult:
    name: str
    passed: bool
    value: float
    bound: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}: {self.value:.3e} (bound {self.bound:.3e})"


@dataclass
class SelftestReport:
    results: list[CheckResult]
    elapsed: float

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def summary(self) -> str:
        lines = [r.line() for r in self.results]
        verdict = "all checks passed" if self.passed else "CHECKS FAILED"
        lines.append(f"{verdict} in {self.elapsed:.1f} s")
        return "\n".join(lines)


def _random_field(grid, rng) -> Field:
    values = rng.standard_normal(grid.shape) + 1j * rng.standard_normal(grid.shape)
    return Field(grid, values, Space.PHYSICAL)


def run_selftest(seed: int = 0) -> SelftestReport:
    start = time.perf_counter()
    rng = np.random.default_rng(seed)
    checks: list[CheckResult] = []

    def check(name: str, value: float, bound: float):
        checks.append(CheckResult(name, bool(value <= bound), float(value), float(bound)))

    # Parseval between physical and Fourier L2 norms.
    g2 = make_grid(2, 8.0, 64)
    worst = 0.0
    for _ in range(5):
        f = _random_field(g2, rng)
        a, b = lp_norm(f, 2), sobolev_norm(f, 0.0)
        worst = max(worst, abs(a - b) / a)
    check("parseval physical vs fourier (relative)", worst, 1e-13)

    # Free-flight unitarity of the propagator.
    worst = 0.0
    for t in (0.3, -1.7, 12.0):
        f = _random_field(g2, rng)
        fhat = Field(g2, np.fft.fftn(f.values), Space.FOURIER)
        moved = apply_multiplier(laplacian_propagator(g2, t), fhat)
        back = Field(g2, np.fft.ifftn(moved.values), Space.PHYSICAL)
        worst = max(worst, abs(lp_norm(back, 2) - lp_norm(f, 2)) / lp_norm(f, 2))
    check("free-flight propagator unitarity drift", worst, 1e-12)

    # Free flow over many steps equals the exact propagator (identity-filter regime).
    g1 = make_grid(1, math.pi, 128)
    psi0 = _random_field(g1, rng)
    scale = lp_norm(psi0, 2)
    psi0 = Field(g1, psi0.values / scale, Space.PHYSICAL)
    problem = SchrodingerProblem(g1, None, beta=0.0, initial=psi0, final_time=2.0**-4)
    traj = run(problem, tau=2.0**-14)  # cutoff 128 >= nyquist 64: filter is identity
    exact = Field(
        g1,
        np.fft.ifft(laplacian_propagator(g1, 2.0**-4).symbol * np.fft.fft(psi0.values)),
        Space.PHYSICAL,
    )
    check("free flow vs exact propagator (1024 steps)", lp_norm(traj.final - exact, 2), 1e-11)

    # Sharp filter idempotence and the quarter-step composition identity.
    for tau in (0.5, 0.03, 0.0007):
        sym = lowpass_filter(g2, tau, SHARP).symbol
        check(f"sharp filter idempotence (tau={tau})", np.abs(sym * sym - sym).max(), 0.0)
        for profile, label in ((SHARP, "sharp"), (SMOOTH, "smooth")):
            a = lowpass_filter(g2, tau, profile).symbol
            b = lowpass_filter(g2, tau / 4.0, profile).symbol
            check(f"{label} filter quarter-step composition (tau={tau})", np.abs(a * b - a).max(), 0.0)

    # Dyadic partition of unity on the grid.
    for profile, label in ((SHARP, "sharp"), (SMOOTH, "smooth")):
        total = dyadic_projection(g2, 1.0, ProjectionKind.BELOW, profile).symbol.copy()
        for M in dyadic_scales(g2):
            total = total + dyadic_projection(g2, M, ProjectionKind.BAND, profile).symbol
        check(f"dyadic partition of unity residue ({label})", np.abs(total - 1.0).max(), 1e-14)

    # ABOVE projection annihilates band-limited fields exactly (sharp profile).
    N = 8.0
    low = dyadic_projection(g2, N, ProjectionKind.BELOW, SHARP)
    above = dyadic_projection(g2, N, ProjectionKind.ABOVE, SHARP)
    f = _random_field(g2, rng)
    band_limited = apply_multiplier(low, Field(g2, np.fft.fftn(f.values), Space.FOURIER))
    check("above-projection annihilation of band-limited field",
          np.abs(apply_multiplier(above, band_limited).values).max(), 0.0)

    # High-pass decay estimate against the homogeneous weight, sharp profile.
    worst = 0.0
    for gamma_exp in (1.0, 2.0):
        f = _random_field(g2, rng)
        fhat = np.fft.fftn(f.values)
        hi = apply_multiplier(above, Field(g2, fhat, Space.FOURIER))
        hi_norm = sobolev_norm(Field(g2, np.fft.ifftn(hi.values), Space.PHYSICAL), 0.0)
        weighted = gradient_weight(g2, gamma_exp).symbol * fhat
        w_norm = sobolev_norm(Field(g2, np.fft.ifftn(weighted), Space.PHYSICAL), 0.0)
        worst = max(worst, hi_norm / (N**-gamma_exp * w_norm))
    check("high-pass decay constant (gamma in {1,2})", worst, 1.0 + 1e-12)

    # Bernstein ratio constancy across a dyadic sweep of scales.
    gb = make_grid(1, math.pi, 2048)
    ratios = [
        bernstein_check(gb, N, math.inf, 2, trials=20, rng=np.random.default_rng(seed + 1)).max_ratio
        for N in (8, 16, 32, 64)
    ]
    check("bernstein ratio spread across N in {8..64}", max(ratios) / min(ratios), 2.0)

    # phi1 bound on the imaginary axis: |phi1(ix)| <= 1, equality only near 0.
    x = rng.uniform(-50.0, 50.0, size=1_000_000)
    mags = np.abs(phi1(1j * x))
    check("phi1 imaginary-axis bound", float(mags.max()), 1.0 + 1e-15)
    far = np.abs(x) > 0.5
    check("phi1 strictly below 1 away from 0", float(mags[far].max()), 1.0 - 1e-3)

    # Norm-boundedness probe of the phi1 kernel composed with the low-pass filter.
    gp = make_grid(1, math.pi, 256)
    tau = 1.0 / 1024.0
    kick = phi1(-1j * tau * gp.mu_abs2()) * lowpass_filter(gp, tau, SHARP).symbol
    worst = 0.0
    for _ in range(100):
        f = _random_field(gp, rng)
        out = Field(gp, np.fft.ifft(kick * np.fft.fft(f.values)), Space.PHYSICAL)
        for p in (1.0, 2.0, math.inf):
            worst = max(worst, lp_norm(out, p) / lp_norm(f, p))
    check("phi1-kernel norm probe, p in {1,2,inf}", worst, 1.5)

    # Delta comb synthesis against the closed-form kernel quotient.
    gd = make_grid(1, 16.0, 1024)
    n_ref = 300  # below the grid's mode count: fold and restrict coincide
    V = delta_series_potential(gd, n_ref)
    x = gd.coordinates()[0]
    u = np.pi * x / (2.0 * gd.half_width)
    with np.errstate(invalid="ignore", divide="ignore"):
        closed = -np.sin((2 * n_ref + 1) * u) / (2.0 * gd.half_width * np.sin(u))
    closed[np.argmin(np.abs(x))] = -(2 * n_ref + 1) / (2.0 * gd.half_width)
    scale = np.abs(closed).max()
    check("delta comb vs closed-form kernel (relative)", np.abs(V.values.real - closed).max() / scale, 1e-12)
    check("delta comb imaginary residue (relative)", np.abs(V.values.imag).max() / scale, 1e-13)

    # Order fitting recovers synthetic power laws.
    worst = 0.0
    for order in (0.5, 1.0):
        taus = [2.0**-k for k in range(3, 11)]
        samples = [ErrorSample(t, 3.7 * t**order, 5.1 * t**order) for t in taus]
        fit = fit_order(samples, "l2")
        worst = max(worst, abs(fit.fitted_order - order))
    check("order fit on synthetic power laws", worst, 1e-10)

    return SelftestReport(checks, time.perf_counter() - start)
