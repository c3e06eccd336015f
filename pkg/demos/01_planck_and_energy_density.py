"""Per-mode energies and the cutoff energy density.

Walks through the two historical per-mode laws, the coth thermal weight
connecting them, and the cutoff energy density with its vacuum and
thermal parts, including the comparison of the thermal part against the
directly integrated blackbody density.
"""

import numpy as np

from vacuumkit import (
    ThermalState,
    blackbody_energy_density,
    energy_density,
    mean_photon_number,
    mode_energy_first_law,
    mode_energy_second_law,
    thermal_weight,
)
from vacuumkit.constants import K_B

state = ThermalState(300.0)
print(f"T = 300 K, temperature frequency theta = {state.temperature_frequency:.4e} rad/s")
print()

print("mode energies across the spectrum at 300 K")
print(f"{'omega [rad/s]':>14} {'n':>12} {'E1 = n hw [J]':>14} {'E2 = (1/2+n) hw [J]':>20} {'coth':>10}")
for omega in np.geomspace(1e12, 1e16, 9):
    n = mean_photon_number(float(omega), state)
    e1 = mode_energy_first_law(float(omega), state)
    e2 = mode_energy_second_law(float(omega), state)
    w = thermal_weight(float(omega), state)
    print(f"{omega:14.3e} {n:12.4e} {e1:14.4e} {e2:20.4e} {w:10.4e}")
print()

print("classical limit: E2 -> k_B T as hbar omega / k_B T -> 0")
for x in (1.0, 0.1, 0.01):
    omega = x * K_B * 300.0 / 1.054571817e-34
    print(f"  x = {x:5.2f}:  E2/(k_B T) = {mode_energy_second_law(omega, state) / (K_B * 300):.6f}")
print()

print("cutoff energy density e = (hbar/160 pi^2 c^3)(20 omega_max^4 + theta^4)")
for omega_max in (0.0, 1e15, 1e16):
    d = energy_density(omega_max, state)
    print(f"  omega_max = {omega_max:8.1e}: vacuum {d.vacuum:11.4e}  thermal {d.thermal:.4e}  [J/m^3]")
print()

d = energy_density(0.0, state)
bb = blackbody_energy_density(state)
print("thermal part vs the integrated blackbody density at 300 K:")
print(f"  thermal addend   {d.thermal:.6e} J/m^3")
print(f"  blackbody (quad) {bb:.6e} J/m^3")
print(f"  ratio            {bb / d.thermal:.9f}  (exactly 2/3: the addend carries a 3/2 factor")
print("   relative to the Stefan-Boltzmann density; kept as defined, documented here)")
