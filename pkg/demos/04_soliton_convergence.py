"""Convergence study: soliton pinned by an attractive delta comb (1D).

A desk-scale version of the flagship experiment: the initial datum is the
stationary bound state of the attractive point interaction with a focusing
cubic term, whose exact evolution is a pure phase. Sweeping the time step and
measuring final-time errors against the exact solution exhibits half-order L2
convergence, driven by the step-coupled low-pass filter and the limited
regularity of the solution.

Run with: python demos/04_soliton_convergence.py  (about two seconds)
"""

import tempfile
from dataclasses import replace
from pathlib import Path

from nlsewi import export_report, preset, run_convergence

# The full preset uses n = 2^14 grid points; a quarter-size grid keeps the
# demo fast and changes nothing qualitative.
config = replace(preset("delta1d", scale=4), taus=tuple(2.0**-k for k in range(4, 10)))
print(f"experiment {config.name}: n={config.n}, T={config.final_time}, "
      f"{len(config.taus)} steps sizes, exact reference")

report = run_convergence(config)
print("\n  tau         e_L2        e_H1")
for s in report.samples:
    print(f"  {s.tau:.5f}   {s.e_l2:.4e}  {s.e_h1:.4e}")

print(f"\nfitted L2 order: {report.fit_l2.fitted_order:.3f} "
      f"(theory predicts {report.predicted.value:g}"
      f"{'-' if report.predicted.strict else ''} for this potential class)")
print(f"fitted H1 order: {report.fit_h1.fitted_order:.3f} "
      "(dominated by the cutoff tail of the kinked datum)")

out = Path(tempfile.mkdtemp(prefix="nlsewi-demo-")) / "delta1d"
paths = export_report(report, out)
print(f"\nwrote {paths['errors']}")
print(f"wrote {paths['report']}")
print("equivalent CLI: nlsewi converge --preset Delta1D --scale 4 --out", out)
