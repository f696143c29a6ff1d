"""Tour of the spectral substrate: grids, transforms, multipliers, and norms.

Run with: python demos/01_spectral_operators.py
"""

import numpy as np

from nlsewi import (
    Direction,
    Field,
    Space,
    apply_multiplier,
    laplacian_propagator,
    lp_norm,
    make_grid,
    phi1,
    sobolev_norm,
    sobolev_weight,
    synthesize,
    transform,
)

# A 1D periodic grid on (-2, 2) with 64 points. Frequencies are pi*l/L in the
# standard transform layout: 0, pi/2, pi, ... then the negative modes.
grid = make_grid(1, 2.0, 64)
print(f"grid: dim={grid.dim} L={grid.half_width} n={grid.n} h={grid.spacing}")
print(f"first frequencies: {np.round(grid.frequencies[:4], 4)}")

# Build a field from prescribed mode coefficients and confirm the round trip.
coeffs = np.zeros(64, complex)
coeffs[3] = 1.0
coeffs[-3] = 0.5j
f = synthesize(grid, coeffs)
fhat = transform(f, Direction.FORWARD)
back = transform(fhat, Direction.INVERSE)
print(f"transform round-trip error: {np.abs(back.values - f.values).max():.2e}")

# Parseval: the physical-space L2 norm equals the Fourier-side version.
print(f"L2 via quadrature {lp_norm(f, 2):.12f}  via coefficients {sobolev_norm(f, 0.0):.12f}")

# The free-flight propagator is a diagonal multiplier with unit-modulus symbol;
# applying it preserves the L2 norm and composes like a group.
prop = laplacian_propagator(grid, t=0.7)
moved = transform(apply_multiplier(prop, fhat), Direction.INVERSE)
print(f"free flight preserves L2: {lp_norm(moved, 2):.12f}")
undo = laplacian_propagator(grid, t=-0.7)
print(f"t and -t compose to identity: {np.abs((prop * undo).symbol - 1).max():.2e}")

# phi1 is the first exponential-integrator kernel (e^z - 1)/z, bounded by 1 on
# the imaginary axis (where the stepper evaluates it).
xs = np.linspace(-40, 40, 9)
print("phi1 magnitudes on the imaginary axis:", np.round(np.abs(phi1(1j * xs)), 4))

# Sobolev weights upgrade the L2 norm to H^s; H^1 of a plane wave picks up the
# factor sqrt(1 + mu^2).
mode = Field(grid, np.exp(1j * grid.frequencies[5] * grid.coordinates()[0]), Space.PHYSICAL)
mu = grid.frequencies[5]
print(f"H1 of plane wave: {sobolev_norm(mode, 1.0):.6f}")
print(f"expected        : {np.sqrt(4.0) * np.sqrt(1 + mu**2):.6f}")
print(f"sobolev weight at zero mode (s=2): {sobolev_weight(grid, 2.0).symbol[0]:.1f}")
