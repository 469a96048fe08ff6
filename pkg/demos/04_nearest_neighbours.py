"""
Nearest-neighbour pairs
=======================

Pairs (1,2) and (2,3) are equivalent by the left-right symmetry of the
chain. The three-spin term weakens their entanglement, and once k >= J the
negative-field boot is gone.
"""
import numpy as np

from threespin import ModelParams, boot_heights, dip_curve, thermal_concurrence

p = ModelParams(1.0, 0.4, 0.8)
for T in (0.05, 0.5):
    c12 = thermal_concurrence(p, T, 12).concurrence
    c23 = thermal_concurrence(p, T, 23).concurrence
    print(f"T = {T}: C12 = {c12:.10f}, C23 = {c23:.10f}")

print("\n   k     C+(12)   C-(12)")
for k in (0, 0.5, 0.99, 1.0, 2.0, 10.0, 100.0):
    b = boot_heights(k, pair=12)
    print(f"{k:6.2f} {b.c_plus:8.5f} {b.c_minus:8.5f}")

rows = dip_curve((0.0, 5.0, 11), 1.0, 12)
print("\n   k     h_dip    C_dip")
for k, h_dip, c_dip, _, _ in rows:
    print(f"{k:5.2f} {h_dip:8.4f} {c_dip:8.5f}")

# a T slice on the negative-field side: the boot is there for k < 1 only
hs = np.linspace(-2, 0, 9)
for k in (0.5, 1.5):
    cs = [thermal_concurrence(ModelParams(1.0, h, k), 0.02, 12).concurrence for h in hs]
    print(f"\nk = {k}, T = 0.02, h from -2 to 0:", np.round(cs, 3))
