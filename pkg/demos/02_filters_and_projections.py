"""Step-coupled low-pass filters and dyadic frequency projections.

The integrator truncates its correction term at the cutoff tau**-0.5; this
demo shows the filter algebra that the solver and its diagnostics rely on.

Run with: python demos/02_filters_and_projections.py
"""

import math

import numpy as np

from nlsewi import (
    SHARP,
    SMOOTH,
    ProjectionKind,
    bernstein_check,
    cutoff_frequency,
    dyadic_projection,
    dyadic_scales,
    lowpass_filter,
    make_grid,
)

grid = make_grid(1, math.pi, 512)  # integer frequencies, Nyquist 256
tau = 1.0 / 900.0
print(f"tau = {tau:.5f} -> cutoff frequency {cutoff_frequency(tau):.1f}")

# The sharp profile keeps exactly the modes inside the cutoff ball; the smooth
# profile rolls off between the cutoff and twice the cutoff.
sharp = lowpass_filter(grid, tau, SHARP).symbol
smooth = lowpass_filter(grid, tau, SMOOTH).symbol
kept = int(sharp.sum())
print(f"sharp filter keeps {kept} of {grid.n} modes; smooth partial weights: "
      f"{int(np.sum((0 < smooth) & (smooth < 1)))}")

# Composition identity: filtering at tau then at tau/4 (a wider filter) equals
# filtering at tau alone, exactly, for both profiles.
for profile, label in ((SHARP, "sharp"), (SMOOTH, "smooth")):
    a = lowpass_filter(grid, tau, profile).symbol
    b = lowpass_filter(grid, tau / 4, profile).symbol
    print(f"{label} quarter-step composition residue: {np.abs(a * b - a).max():.1e}")

# Dyadic partition of unity: below(1) plus the bands at scales 1, 2, 4, ...
# telescopes to 1 on every grid frequency.
for profile, label in ((SHARP, "sharp"), (SMOOTH, "smooth")):
    total = dyadic_projection(grid, 1.0, ProjectionKind.BELOW, profile).symbol.copy()
    for M in dyadic_scales(grid):
        total += dyadic_projection(grid, M, ProjectionKind.BAND, profile).symbol
    print(f"partition of unity residue ({label}): {np.abs(total - 1.0).max():.1e}")

# Norm-upgrade measurement: |below(N) f|_inf <= C * N^(1/2) |f|_2 with C
# independent of N. The measured constants stay within a factor 2 across a
# dyadic sweep of scales.
print("\nscale  measured max ratio (q=2 -> p=inf)")
ratios = []
for N in (8.0, 16.0, 32.0, 64.0):
    rep = bernstein_check(grid, N, math.inf, 2.0, trials=20, rng=np.random.default_rng(1))
    ratios.append(rep.max_ratio)
    print(f"{N:5.0f}  {rep.max_ratio:.5f}")
print(f"spread across scales: {max(ratios) / min(ratios):.3f} (< 2)")
