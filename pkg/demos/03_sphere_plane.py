"""Sphere-plane force through the proximity mapping.

Modern force measurements replace the parallel-plate geometry with a
sphere above a plane; the proximity theorem maps the plane-plane energy
per area at closest approach onto the sphere force with the Derjaguin
prefactor 2 pi R.  The correction factor of the sphere force is then the
plane-plane energy factor at the same distance.
"""

import numpy as np

from vacuumkit import (
    CavityConfig,
    CavityReflection,
    PerfectMirror,
    PlasmaMirror,
    SpherePlaneConfig,
    real_mirror_energy,
    sphere_plane_force,
)

R = 100e-6  # 100 um sphere
gold = PlasmaMirror.from_wavelength(136e-9)
mirrors = CavityReflection(gold, gold)

print(f"gold sphere R = {R * 1e6:.0f} um above a gold plane, T = 0")
print(f"{'L [um]':>7} {'F_sphere [N]':>13} {'eta':>8} {'flags'}")
for L in np.geomspace(0.2e-6, 5e-6, 7):
    res = sphere_plane_force(SpherePlaneConfig(R=R, L=float(L), temperature=0.0, mirrors=mirrors))
    print(f"{L * 1e6:7.2f} {res.force:13.4e} {res.eta:8.4f} {','.join(res.flags) or '-'}")
print()

L = 1e-6
res = sphere_plane_force(SpherePlaneConfig(R=R, L=L, temperature=0.0, mirrors=mirrors))
plane = real_mirror_energy(CavityConfig(L=L, A=1e-4, temperature=0.0, mirrors=mirrors))
print("the sphere eta is the plane-plane energy factor at the same distance:")
print(f"  sphere eta          {res.eta:.6f}")
print(f"  plane-plane eta_E   {plane.eta_E:.6f}")
print()

perfect = CavityReflection(PerfectMirror(), PerfectMirror())
ideal = sphere_plane_force(SpherePlaneConfig(R=R, L=L, temperature=0.0, mirrors=perfect))
print(f"perfect mirrors at L = 1 um: F = 2 pi R hbar c pi^2/(720 L^3) = {ideal.force:.4e} N")
print(f"conduction correction removes {(1 - res.force / ideal.force) * 100:.1f}% of it")
