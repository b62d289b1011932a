"""Every closed-form energy is validated against an independent route.

The quantization condition is solved numerically (bracketing on the residual,
no reference to the closed form) and compared level by level; the reduced
potentials get their own formula codings; the weak-screening limit lands on
the hydrogen spectrum.

Run:  python3 demos/02_energy_crosschecks.py
"""

import numpy as np

from mrey import (
    PhysicalConstants,
    PotentialParams,
    energy,
    energy_long_form,
    energy_manning_rosen,
    energy_yukawa,
)
from mrey.nu import solve_bound_state

consts = PhysicalConstants()

print("== closed form vs quantization-condition roots ==")
deep = PotentialParams(0.01, 0.005, 5.0, 0.5)
print(f"{'n':>2} {'l':>2} {'closed form':>16} {'root solve':>16} {'rel gap':>10}")
for n in range(4):
    for l in range(3):
        level = energy(deep, consts, n, l)
        if not level.valid_bound_state:
            continue
        root = solve_bound_state(deep, consts, n, l)
        gap = abs(root - level.energy) / abs(level.energy)
        print(f"{n:>2} {l:>2} {level.energy:>16.12f} {root:>16.12f} {gap:>10.2e}")

print()
print("== compact vs long-hand coding of the same formula ==")
rng = np.random.default_rng(1)
worst = 0.0
for _ in range(500):
    alpha = rng.uniform(0.1, 1.0)
    scale = alpha * alpha / 16.0
    params = PotentialParams(
        rng.uniform(-scale, scale), rng.uniform(-scale, scale),
        rng.uniform(0.2, 4.0), alpha,
    )
    n, l = int(rng.integers(0, 6)), int(rng.integers(0, 4))
    a = energy(params, consts, n, l).energy
    b = energy_long_form(params, consts, n, l)
    worst = max(worst, abs(a - b) / max(1.0, abs(a)))
print(f"  500 random levels, worst relative gap {worst:.2e}")

print()
print("== special-case reductions ==")
mr = PotentialParams(0.01, 0.01, 0.0, 0.5)
print(f"  two-term well only:  general {energy(mr, consts, 0, 0).energy:+.10f}"
      f"  dedicated route {energy_manning_rosen(mr, consts, 0, 0):+.10f}")
yu = PotentialParams(0.0, 0.0, 1.0, 0.5)
print(f"  screened Coulomb:    general {energy(yu, consts, 0, 0).energy:+.10f}"
      f"  dedicated route {energy_yukawa(yu, consts, 0, 0):+.10f}")

print()
print("== weak-screening (Coulomb) limit ==")
print("as alpha -> 0 the screened-Coulomb levels approach -1/(2 (n+1)^2):")
for alpha in (1e-2, 1e-3, 1e-4):
    row = []
    for n in range(3):
        e = energy_yukawa(PotentialParams(0.0, 0.0, 1.0, alpha), consts, n, 0)
        target = -0.5 / (n + 1) ** 2
        row.append(f"n={n}: {e:+.6f} (target {target:+.6f})")
    print(f"  alpha={alpha:g}  " + "   ".join(row))
