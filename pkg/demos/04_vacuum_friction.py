"""Mechanical reaction of the fluctuating field on a moving mirror.

Three effects, all minuscule yet sharply defined: the inertia correction
of a stressed cavity, the friction exerted by a thermal field on a mirror
in uniform motion, and the vacuum reaction that appears only at the fifth
time derivative of the trajectory, so uniform velocity and uniform
acceleration pass without resistance.
"""

import numpy as np

from vacuumkit import (
    ThermalState,
    Trajectory,
    casimir_inertia_mass,
    motional_force_time_domain,
    thermal_friction_force,
    thermal_susceptibility,
    vacuum_susceptibility,
)

print("inertia of the cavity stress, mu = (E - F L)/c^2 = -2 E / c^2")
for L in (0.5e-6, 1e-6, 2e-6):
    print(f"  L = {L * 1e6:4.1f} um, A = 1 cm^2:  mu = {casimir_inertia_mass(L, 1e-4):+.3e} kg")
print()

A = 1.0  # 1 m^2 mirror
state = ThermalState(300.0)
chi_th, _ = thermal_susceptibility(1.0, A, state)
print(f"thermal friction coefficient at 300 K, A = 1 m^2:")
print(f"  chi/Omega = {chi_th.value.imag:.3e} N s/m  (force on 1 m/s uniform motion)")
print()

print("vacuum reaction: chi = i (hbar A / 60 pi^2 c^4) Omega^5")
for omega in (1e6, 1e9, 1e12):
    chi, validity = vacuum_susceptibility(omega, A)
    note = "" if validity.area_ok else "   [A >> c^2/Omega^2 not satisfied]"
    print(f"  Omega = {omega:8.1e} rad/s:  |chi| = {abs(chi.value):.3e} N/m{note}")
print()

print("time domain: polynomials up to degree 4 draw no vacuum reaction")
dt = 1e-3
t = dt * np.arange(4001)
for name, q in [
    ("rest", np.full_like(t, 1e-9)),
    ("uniform velocity", 1e-3 * t),
    ("uniform acceleration", 0.5 * 9.81 * t**2),
    ("cubic flyby", 1e-3 * t - 2e-4 * t**3),
]:
    tf = motional_force_time_domain(Trajectory(q, dt), A)
    print(f"  {name:22s} max |F| = {np.max(np.abs(tf.interior)):.2e} N")
print()

omega, q0 = 1e6, 1e-9
dts = 0.01 / omega
ts = dts * np.arange(20001)
traj = Trajectory(q0 * np.sin(omega * ts), dts)
tf = motional_force_time_domain(traj, A)
chi, _ = vacuum_susceptibility(omega, A)
print("an oscillating mirror is resisted; time-domain amplitude vs |chi| q0:")
print(f"  measured  {np.max(np.abs(tf.interior)):.6e} N")
print(f"  predicted {abs(chi.value) * q0:.6e} N")
print()

friction = thermal_friction_force(Trajectory(1e-3 * t, dt), A, state)
print(f"thermal field at 300 K on 1 mm/s uniform motion: F = {friction.interior[0]:.3e} N")
print("(the vacuum piece of the same trajectory is zero: only thermal photons rub)")
