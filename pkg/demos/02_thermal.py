"""
Thermal concurrence of the alternate pair
=========================================

The reduced state of qubits 1 and 3 is an X state. Its weights have a
closed form, and the concurrence of that form is compared here with a
brute-force Gibbs state, partial trace and Wootters formula.
"""
import numpy as np

from threespin import (
    ModelParams,
    build_hamiltonian,
    concurrence_from_xstate,
    gibbs_state,
    reduced_pair_state,
    thermal_concurrence,
    xstate_closed_form,
)

p = ModelParams(J=1.0, h=-0.5, k=0.5)
T = 0.2

x = xstate_closed_form(p, T)
print(f"u = {x.u:.6g}, v = {x.v:.6g}, w = {x.w:.6g}, y = {x.y:.6g}, Z = {x.Z:.6g}")
print("trace check u + v + 2w - Z =", x.u + x.v + 2 * x.w - x.Z)

rho13 = reduced_pair_state(gibbs_state(build_hamiltonian(p), T), 13)
print("closed form vs numeric reduced state:", np.max(np.abs(x.matrix() - rho13)))
print("concurrence from the X state:", concurrence_from_xstate(x))

tp = thermal_concurrence(p, T)
print(f"both routes: closed form {tp.closed_form:.12f}, numeric {tp.numeric:.12f}")

# a coarse C(h, T) map for k = 0.5; rows are fields, columns temperatures
hs = np.linspace(-2, 2, 9)
Ts = [0.01, 0.1, 0.3, 0.6, 1.0]
print("\n  h  \\ T " + "".join(f"{T:>8.2f}" for T in Ts))
for h in hs:
    row = [thermal_concurrence(ModelParams(1.0, h, 0.5), T).concurrence for T in Ts]
    print(f"{h:+7.2f} " + "".join(f"{c:8.4f}" for c in row))
