"""Quantum-vacuum observables.

Numerical library for the mechanical and optical signatures of vacuum
field fluctuations: per-mode energies and the cutoff energy density,
Casimir forces between real mirrors with conductivity and temperature
corrections, the sphere-plane proximity mapping, the inertia of the
cavity stress, motional (vacuum-friction) susceptibilities and forces,
and beam-splitter photon-noise statistics.
"""

__version__ = "0.1.0"

from .casimir import (
    CavityConfig,
    EtaSweepResult,
    ForceResult,
    SpherePlaneConfig,
    SpherePlaneResult,
    eta_sweep,
    ideal_energy,
    ideal_energy_per_area,
    ideal_force,
    ideal_force_per_area,
    real_mirror_energy,
    real_mirror_force,
    sphere_plane_force,
    thermal_energy,
    thermal_force,
)
from .constants import CODATA, C, HBAR, K_B, PhysicalConstants
from .errors import ConvergenceError, DomainError, SingularResonanceError
from .mirrors import (
    CavityReflection,
    DEFAULT_MATERIALS,
    Mirror,
    ModeCoordinate,
    PerfectMirror,
    PlasmaMirror,
    Polarization,
    airy_factor,
    airy_function,
    load_material_file,
    material_table,
    preset_mirror,
    reflection_amplitude_imaginary,
)
from .motional import (
    MotionalValidity,
    Susceptibility,
    Trajectory,
    TrajectoryForce,
    casimir_inertia_mass,
    finite_difference_weights,
    motional_force_time_domain,
    thermal_friction_force,
    thermal_susceptibility,
    vacuum_susceptibility,
)
from .photon_noise import (
    BeamSplitterSetup,
    MonteCarloResult,
    QuadratureState,
    difference_variance,
    fano_factor,
    make_squeezed,
    monte_carlo_difference,
)
from .planck import (
    EnergyDensity,
    ThermalState,
    blackbody_energy_density,
    energy_density,
    mean_photon_number,
    mode_energy_first_law,
    mode_energy_second_law,
    thermal_weight,
)

__all__ = [
    "__version__",
    "C",
    "CODATA",
    "HBAR",
    "K_B",
    "PhysicalConstants",
    "ConvergenceError",
    "DomainError",
    "SingularResonanceError",
    "ThermalState",
    "EnergyDensity",
    "mean_photon_number",
    "mode_energy_first_law",
    "mode_energy_second_law",
    "thermal_weight",
    "energy_density",
    "blackbody_energy_density",
    "Polarization",
    "ModeCoordinate",
    "Mirror",
    "PerfectMirror",
    "PlasmaMirror",
    "CavityReflection",
    "reflection_amplitude_imaginary",
    "airy_factor",
    "airy_function",
    "DEFAULT_MATERIALS",
    "load_material_file",
    "material_table",
    "preset_mirror",
    "CavityConfig",
    "ForceResult",
    "SpherePlaneConfig",
    "SpherePlaneResult",
    "EtaSweepResult",
    "ideal_force",
    "ideal_energy",
    "ideal_force_per_area",
    "ideal_energy_per_area",
    "real_mirror_energy",
    "real_mirror_force",
    "thermal_force",
    "thermal_energy",
    "eta_sweep",
    "sphere_plane_force",
    "Trajectory",
    "TrajectoryForce",
    "Susceptibility",
    "MotionalValidity",
    "casimir_inertia_mass",
    "finite_difference_weights",
    "thermal_susceptibility",
    "vacuum_susceptibility",
    "motional_force_time_domain",
    "thermal_friction_force",
    "QuadratureState",
    "BeamSplitterSetup",
    "MonteCarloResult",
    "make_squeezed",
    "difference_variance",
    "fano_factor",
    "monte_carlo_difference",
]
