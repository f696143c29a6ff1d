"""Singular potentials on the grid, and the regularity/order tables.

Run with: python demos/03_singular_potentials.py
"""

import numpy as np

from nlsewi import (
    delta_series_potential,
    make_grid,
    power_law_potential,
    predicted_order,
    regularity_loss,
    sigma_window,
)

# --- 1D: truncated periodic delta comb -------------------------------------
grid = make_grid(1, 16.0, 2**12)
n_ref = 2**16

# "fold" reproduces the samples of the truncated series (the closed-form
# kernel quotient); with n_ref far beyond the grid modes the aliased copies
# pile up and the comb's effective strength grows by about 2*n_ref/n.
folded = delta_series_potential(grid, n_ref, aliasing="fold")
x = grid.coordinates()[0]
i0 = np.argmin(np.abs(x))
print(f"folded comb:      V(0) = {folded.values.real[i0]:.2f}, "
      f"off-peak max {np.abs(np.delete(folded.values.real, i0)).max():.4f}")

# "restrict" projects the series onto the grid's own modes instead; pointwise
# products against it act as the exact point interaction on band-limited
# fields, which is what the convergence experiments use.
restricted = delta_series_potential(grid, n_ref, aliasing="restrict")
print(f"restricted comb:  V(0) = {restricted.values.real[i0]:.2f}, "
      f"off-peak max {np.abs(np.delete(restricted.values.real, i0)).max():.2e}")

# --- 2D/3D: power-law symbols ----------------------------------------------
g2 = make_grid(2, 8.0, 128)
V2 = power_law_potential(g2, gamma=0.5)  # behaves like -|x|^(-3/2) near 0
print(f"\n2D power potential: min {V2.values.real.min():.2f} "
      f"(imag residue {np.abs(V2.values.imag).max():.1e})")

g3 = make_grid(3, 8.0, 32)
for gamma in (1.5, 1.25):
    V3 = power_law_potential(g3, gamma=gamma)
    print(f"3D power potential gamma={gamma}: min {V3.values.real.min():.2f}")

# --- Regularity loss and predicted convergence orders -----------------------
print("\n p      d   loss alpha   predicted L2 order   sigma window")
cases = [(1.0, 1), (4.0 / 3.0, 2), (12.0 / 7.0, 3), (2.0, 3), (3.0, 3)]
for p, d in cases:
    alpha = regularity_loss(p, d)
    order = predicted_order(p, d)
    lo, hi = sigma_window(p, d)
    a = f"{alpha.value:g}{'+' if alpha.strict else ''}"
    o = f"{order.value:g}{'-' if order.strict else ''}"
    print(f"{p:5.3f}  {d}   {a:>9}   {o:>15}        ({lo:g}, {hi:g})")
