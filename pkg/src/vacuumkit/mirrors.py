"""Mirror reflection models and the cavity redistribution (Airy) factor.

Two mirror variants are provided: the perfect reflector and the lossless
plasma model with dielectric function eps(i xi) = 1 + omega_p^2 / xi^2 on
the imaginary frequency axis.  All Casimir computations for real mirrors
run on the imaginary axis, where the amplitudes are real, bounded by one
in magnitude (unitarity) and transparent at high frequency.  Real-axis
amplitudes exist only for perfect mirrors; below the plasma frequency a
plasma mirror totally reflects and the real-axis spectral integrand is
not an ordinary function, so that path is deliberately not implemented.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from enum import Enum
from typing import Union

import numpy as np

from .constants import C
from .errors import DomainError, SingularResonanceError


class Polarization(Enum):
    """Transverse electric / transverse magnetic; every spectral sum runs over both."""

    TE = "TE"
    TM = "TM"


POLARIZATIONS = (Polarization.TE, Polarization.TM)


@dataclass(frozen=True)
class ModeCoordinate:
    """One field mode: either real frequency omega with an incidence angle
    (propagating sector) or imaginary frequency xi with transverse
    wavevector k.  Exactly one of omega/xi is set."""

    kappa: float  # longitudinal wavevector [1/m]
    k: float  # transverse wavevector [1/m]
    omega: float | None = None
    xi: float | None = None
    incidence_angle: float | None = None

    def __post_init__(self):
        if (self.omega is None) == (self.xi is None):
            raise DomainError("exactly one of omega (real axis) or xi (imaginary axis) must be set")

    @property
    def is_real_axis(self) -> bool:
        return self.omega is not None

    @classmethod
    def real_axis(cls, omega: float, incidence_angle: float) -> "ModeCoordinate":
        """kappa = (omega/c) cos(angle), k = (omega/c) sin(angle)."""
        if not (math.isfinite(omega) and omega > 0.0):
            raise DomainError(f"omega must be finite and > 0, got {omega!r}")
        if not (0.0 <= incidence_angle <= 0.5 * math.pi):
            raise DomainError(f"incidence angle must lie in [0, pi/2], got {incidence_angle!r}")
        return cls(
            kappa=(omega / C) * math.cos(incidence_angle),
            k=(omega / C) * math.sin(incidence_angle),
            omega=omega,
            incidence_angle=incidence_angle,
        )

    @classmethod
    def imaginary_axis(cls, xi: float, k: float) -> "ModeCoordinate":
        """kappa = sqrt(xi^2/c^2 + k^2)."""
        if not (math.isfinite(xi) and xi > 0.0):
            raise DomainError(f"xi must be finite and > 0, got {xi!r}")
        if not (math.isfinite(k) and k >= 0.0):
            raise DomainError(f"k must be finite and >= 0, got {k!r}")
        return cls(kappa=math.hypot(xi / C, k), k=k, xi=xi)


def _shaped(value: float, *arrays):
    shape = np.broadcast_shapes(*(np.shape(a) for a in arrays))
    if shape == ():
        return float(value)
    return np.full(shape, value)


@dataclass(frozen=True)
class PerfectMirror:
    """Unit reflection at every frequency.

    Sign convention at the surface: TE amplitude -1, TM amplitude +1.
    Observables depend only on amplitude products and magnitudes, so the
    convention is fixed by requiring the ideal closed forms in the
    perfect-mirror limit.
    """

    def amplitude_imaginary(self, xi, k, pol: Polarization):
        return _shaped(-1.0 if pol is Polarization.TE else 1.0, xi, k)

    def amplitude_static(self, k, pol: Polarization):
        return _shaped(-1.0 if pol is Polarization.TE else 1.0, k)

    def amplitude_real(self, mode: ModeCoordinate, pol: Polarization) -> float:
        return -1.0 if pol is Polarization.TE else 1.0


@dataclass(frozen=True)
class PlasmaMirror:
    """Lossless metal with plasma frequency omega_p.

    eps(i xi) = 1 + omega_p^2 / xi^2, kappa_m = sqrt(eps xi^2/c^2 + k^2),
    TE: (kappa - kappa_m)/(kappa + kappa_m),
    TM: (eps kappa - kappa_m)/(eps kappa + kappa_m).
    """

    plasma_frequency: float  # rad/s

    def __post_init__(self):
        wp = self.plasma_frequency
        if not (isinstance(wp, (int, float)) and math.isfinite(wp) and wp > 0.0):
            raise DomainError(f"plasma frequency must be finite and > 0, got {wp!r}")

    @property
    def plasma_wavelength(self) -> float:
        """lambda_p = 2 pi c / omega_p [m]."""
        return 2.0 * math.pi * C / self.plasma_frequency

    @classmethod
    def from_wavelength(cls, plasma_wavelength: float) -> "PlasmaMirror":
        if not (math.isfinite(plasma_wavelength) and plasma_wavelength > 0.0):
            raise DomainError(f"plasma wavelength must be finite and > 0, got {plasma_wavelength!r}")
        return cls(plasma_frequency=2.0 * math.pi * C / plasma_wavelength)

    def amplitude_imaginary(self, xi, k, pol: Polarization):
        xi = np.asarray(xi, dtype=float)
        k = np.asarray(k, dtype=float)
        q2 = (xi / C) ** 2
        k2 = k * k
        kp2 = (self.plasma_frequency / C) ** 2
        kappa = np.sqrt(q2 + k2)
        kappa_m = np.sqrt(q2 + kp2 + k2)
        if pol is Polarization.TE:
            r = (kappa - kappa_m) / (kappa + kappa_m)
        else:
            eps_kappa = (1.0 + (self.plasma_frequency / xi) ** 2) * kappa
            r = (eps_kappa - kappa_m) / (eps_kappa + kappa_m)
        return float(r) if r.ndim == 0 else r

    def amplitude_static(self, k, pol: Polarization):
        """xi -> 0 limit at fixed k: TM -> +1, TE keeps its k dependence."""
        if pol is Polarization.TM:
            return _shaped(1.0, k)
        k = np.asarray(k, dtype=float)
        km = np.sqrt(k * k + (self.plasma_frequency / C) ** 2)
        r = (k - km) / (k + km)
        return float(r) if r.ndim == 0 else r

    def amplitude_real(self, mode: ModeCoordinate, pol: Polarization) -> float:
        raise NotImplementedError(
            "real-axis plasma amplitudes are not implemented (total reflection below "
            "the plasma frequency makes the real-axis integrand distributional); "
            "use the imaginary-axis path"
        )


Mirror = Union[PerfectMirror, PlasmaMirror]


def reflection_amplitude_imaginary(model: Mirror, xi, k, pol: Polarization):
    """Imaginary-axis reflection amplitude of one mirror, real in [-1, 1].

    xi must be > 0 and k >= 0 (elementwise for array input).
    """
    xi_a = np.asarray(xi, dtype=float)
    k_a = np.asarray(k, dtype=float)
    if not (np.all(np.isfinite(xi_a)) and np.all(xi_a > 0.0)):
        raise DomainError("xi must be finite and > 0")
    if not (np.all(np.isfinite(k_a)) and np.all(k_a >= 0.0)):
        raise DomainError("k must be finite and >= 0")
    return model.amplitude_imaginary(xi_a if xi_a.ndim else float(xi_a), k_a if k_a.ndim else float(k_a), pol)


@dataclass(frozen=True)
class CavityReflection:
    """Mirror pair of a cavity; the loop amplitude is the product of the
    two single-mirror amplitudes at identical mode coordinates."""

    mirror1: Mirror
    mirror2: Mirror

    @property
    def both_perfect(self) -> bool:
        return isinstance(self.mirror1, PerfectMirror) and isinstance(self.mirror2, PerfectMirror)

    def amplitude_imaginary(self, xi, k, pol: Polarization):
        return self.mirror1.amplitude_imaginary(xi, k, pol) * self.mirror2.amplitude_imaginary(xi, k, pol)

    def amplitude_static(self, k, pol: Polarization):
        return self.mirror1.amplitude_static(k, pol) * self.mirror2.amplitude_static(k, pol)


def airy_factor(r_p: complex, kappa_L: float) -> float:
    """Cavity redistribution factor g = (1 - |r|^2) / |1 - r exp(2 i kappa L)|^2.

    ``r_p`` is the loop amplitude (product of the two mirror amplitudes)
    at the mode, ``kappa_L`` the phase kappa * L.  For |r| < 1 the factor
    lies in [(1-|r|)/(1+|r|), (1+|r|)/(1-|r|)] and averages to 1 over a
    phase period.  |r| = 1 returns 0 off resonance and raises
    SingularResonanceError on resonance.
    """
    r = complex(r_p)
    mag2 = abs(r) ** 2
    if mag2 > 1.0 + 1e-12:
        raise DomainError(f"|r_p| must not exceed 1, got {abs(r)!r}")
    num = max(1.0 - mag2, 0.0)
    denom = abs(1.0 - r * complex(math.cos(2.0 * kappa_L), math.sin(2.0 * kappa_L))) ** 2
    if denom < 1e-30:
        if num < 1e-30:
            raise SingularResonanceError(
                "unit-reflectivity cavity evaluated on resonance; use the closed-form "
                "perfect-mirror expressions"
            )
        return num / denom
    return num / denom


def airy_function(cavity: CavityReflection, mode: ModeCoordinate, L: float, pol: Polarization) -> float:
    """Airy factor of a cavity for a real-axis mode at plate distance L.

    Only mirrors with real-axis amplitudes (perfect mirrors) are accepted;
    for diagnostics with a user-supplied loop amplitude use ``airy_factor``.
    """
    if not mode.is_real_axis:
        raise DomainError("airy_function needs a real-axis mode")
    if not (math.isfinite(L) and L > 0.0):
        raise DomainError(f"L must be finite and > 0, got {L!r}")
    r_p = cavity.mirror1.amplitude_real(mode, pol) * cavity.mirror2.amplitude_real(mode, pol)
    return airy_factor(r_p, mode.kappa * L)


# --- material presets ------------------------------------------------------

# name -> plasma wavelength in nm; 136 nm reproduces the conduction
# correction scale of gold and copper mirrors
DEFAULT_MATERIALS = {"gold": 136.0, "copper": 136.0}

# points at a preset file overriding/extending the built-in table
MATERIALS_ENV_VAR = "VACUUMKIT_MATERIALS"


def load_material_file(path: str) -> dict[str, float]:
    """Parse a preset file of lines ``name = <plasma wavelength in nm>``.

    Blank lines and ``#`` comments are ignored.
    """
    table: dict[str, float] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise DomainError(f"{path}:{lineno}: expected 'name = <nm>', got {raw.rstrip()!r}")
            name, _, value = line.partition("=")
            name = name.strip()
            try:
                nm = float(value.strip())
            except ValueError as exc:
                raise DomainError(f"{path}:{lineno}: bad plasma wavelength {value.strip()!r}") from exc
            if not (math.isfinite(nm) and nm > 0.0):
                raise DomainError(f"{path}:{lineno}: plasma wavelength must be > 0")
            table[name] = nm
    return table


def material_table() -> dict[str, float]:
    """Built-in presets merged with the optional environment override file."""
    table = dict(DEFAULT_MATERIALS)
    override = os.environ.get(MATERIALS_ENV_VAR)
    if override:
        table.update(load_material_file(override))
    return table


def preset_mirror(name: str, table: dict[str, float] | None = None) -> PlasmaMirror:
    """Plasma mirror for a named material preset."""
    table = material_table() if table is None else table
    if name not in table:
        raise DomainError(f"unknown material preset {name!r}; known: {sorted(table)}")
    return PlasmaMirror.from_wavelength(table[name] * 1e-9)
