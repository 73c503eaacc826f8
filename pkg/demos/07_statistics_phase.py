#!/usr/bin/env python3
"""The full pipeline: from constructed single-particle matrix data to the
statistics phase via reflected boundary values, for five spins."""

from anyonstat import spinstat as ss

print("=" * 70)
print("Recovering the statistics phase from single-particle data")
print("=" * 70)
print("""
For each spin s a toy family is built whose boost-dressed matrices extend
analytically into the strip, together with conjugate data tied to a unitary
proportionality matrix D.  The pipeline then, independently of how the data
was built:
  1. recomputes both reflected boundary routes with the continuation engine,
  2. extracts D and checks it is constant across the momentum grid,
  3. verifies the half-turn relation between the two routes,
  4. solves for the scalar relating the reflected two-point products.
That scalar is the statistics phase; it must equal e^{2 pi i s}.
""")

print(f"{'spin':>8} | {'recovered phase':>24} | {'target':>24} | {'error':>9}")
print("-" * 76)
for s in (0.0, 0.25, 1 / 3, 0.5, 0.137):
    rep = ss.run_pipeline(s, m=1.0, n=2, seed=7, grid_size=3)
    w, t = rep.omega_hat, rep.omega_target
    print(f"{s:8.4f} | {w.real:+.8f}{w.imag:+.8f}i | {t.real:+.8f}{t.imag:+.8f}i "
          f"| {rep.phase_error:.2e}")

rep = ss.run_pipeline(1 / 3, m=1.0, n=2, seed=7, grid_size=3)
print("\nResiduals of the supporting identities at s = 1/3:")
for k, v in rep.residuals.items():
    print(f"  {k:24s} {v:.3e}")
print("\nweak phase relation |omega^2 - e^{4 pi i s}| =", f"{rep.weak_error:.2e}")
