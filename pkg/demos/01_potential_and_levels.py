"""Tour of the potential itself and the closed-form level table.

Run:  python3 demos/01_potential_and_levels.py
"""

import numpy as np

from mrey import (
    PhysicalConstants,
    PotentialParams,
    classify_special_case,
    evaluate_potential,
    greene_aldrich,
    spectral_coefficients,
    spectrum_table,
)

consts = PhysicalConstants()  # hbar = mu = k = 1
params = PotentialParams(a1=0.0, a2=0.0, a3=1.0, alpha=0.5)

print("== the potential ==")
print(f"couplings a1={params.a1}, a2={params.a2}, a3={params.a3}, "
      f"alpha={params.alpha}  ->  {classify_special_case(params).value}")
for r in (0.5, 1.0, 2.0, 5.0, 20.0):
    print(f"  V({r:4g}) = {evaluate_potential(params, r):+.6f}")

print()
print("== screening approximation quality ==")
print("the centrifugal stand-in alpha^2/(1-e^-ar)^2 is excellent for small")
print("alpha*r and degrades as alpha*r approaches 1:")
for r in (0.01, 0.1, 0.5, 1.0, 2.0):
    approx, _ = greene_aldrich(params.alpha, r)
    exact = 1.0 / r**2
    print(f"  r={r:5g}  alpha*r={params.alpha * r:4g}  "
          f"relative error {abs(approx - exact) / exact:.2e}")

print()
print("== coefficients behind the level formula ==")
coeffs = spectral_coefficients(params, consts, l=0)
print(f"  Q1={coeffs.q1}, Q2={coeffs.q2}, Q3={coeffs.q3}, delta={coeffs.delta}")
print("  E(n) = Q1 - Q2 (rho + Q3/rho)^2 with rho = n + delta")

print()
print("== the level table ==")
print("raw formula values are kept for every (n, l); physical validity is a")
print("separate flag (u > 0 and xi^2 > 0), so the non-binding rows are visible:")
table = spectrum_table(params, consts, n_max=5, l_max=3)
print(f"  {'n':>2} {'l':>2} {'E':>12} {'state':>9}")
for row in table.rows:
    tag = "bound" if row.valid_bound_state else ("marginal" if row.marginal else "unbound")
    print(f"  {row.n:>2} {row.l:>2} {row.energy:>12.6f} {tag:>9}")

print()
print("only the (n=0, l=0) level of this shallow well binds; deepening the")
print("well (larger a3) admits more rows:")
deep = PotentialParams(0.0, 0.0, 5.0, 0.5)
deep_table = spectrum_table(deep, consts, n_max=5, l_max=3)
bound = sum(r.valid_bound_state for r in deep_table.rows)
print(f"  a3 = 5: {bound} of {len(deep_table.rows)} rows are bound states")
