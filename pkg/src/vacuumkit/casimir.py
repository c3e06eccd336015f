"""Casimir force and energy between plane mirrors, and the proximity
mapping to the sphere-plane geometry.

Perfect mirrors use the closed forms

    F = hbar c pi^2 A / (240 L^4),    E = hbar c pi^2 A / (720 L^3),

with force positive for attraction and energy positive as the magnitude
of the binding energy (the physical binding energy is -E), so that
F = -dE/dL holds for the reported quantities.

Real mirrors are evaluated on the imaginary frequency axis, where the
spectral integrand is smooth and free of the oscillations of the
real-axis form.  After the substitution u = 2 kappa L that compresses the
exponential tail, the zero-temperature results per unit area read

    E/A = hbar c / (32 pi^2 L^3) * Int dphi sin(phi) Int du u^2 G_E(u, phi)
    F/A = hbar c / (32 pi^2 L^4) * Int dphi sin(phi) Int du u^3 G_F(u, phi)

with the polarization-summed kernels

    G_E = sum_p -ln(1 - r_p e^-u),   G_F = sum_p r_p e^-u / (1 - r_p e^-u),

r_p the loop amplitude of the mirror pair at xi = (c u / 2L) cos(phi),
k = (u / 2L) sin(phi).  At finite temperature the xi integral becomes the
Matsubara sum over xi_n = n * 2 pi k_B T / hbar with the n = 0 term at
half weight:

    E/A = k_B T / (8 pi L^2) * Sum'_n Int_{u_n} du u   G_E(u; xi_n)
    F/A = k_B T / (8 pi L^3) * Sum'_n Int_{u_n} du u^2 G_F(u; xi_n)

where u_n = 2 xi_n L / c.  The T = 0 operations recover the closed forms
for perfect mirrors to machine precision and the Matsubara sum reduces to
them continuously as T -> 0.

All quadratures and sums run in a fixed order; identical inputs give
bit-identical results.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

import numpy as np

from .constants import C, HBAR, K_B
from .errors import ConvergenceError, DomainError
from .mirrors import CavityReflection, Mirror, PerfectMirror, Polarization
from .planck import ThermalState
from .quadrature import adaptive_gauss_legendre

# exp(-u) beyond this u is below 1.8e-35; irrelevant against the 1e-9 targets
_U_SPAN = 80.0

# inner tolerance is kept a decade and a half below the outer one so the
# outer refinement never chases inner quadrature noise
_OUTER_REL_TOL = 3e-9
_INNER_REL_TOL = 1e-10

_MATSUBARA_TERM_REL = 1e-10
_MATSUBARA_MIN_TERMS = 20
_MATSUBARA_MAX_TERMS = 200_000
_FEW_TERMS_WARN = 10

# reported relative error must stay below this, else ConvergenceError
_ERROR_CEILING = 1e-8

FLAG_PLANE_LIMIT = "A_not_much_larger_than_L_squared"
FLAG_PROXIMITY = "R_not_much_larger_than_L"
FLAG_FEW_MATSUBARA = "few_matsubara_terms"


def _check_positive(name: str, value: float) -> None:
    if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0.0):
        raise DomainError(f"{name} must be finite and > 0, got {value!r}")


# --- ideal closed forms ----------------------------------------------------


def ideal_force_per_area(L: float) -> float:
    """hbar c pi^2 / (240 L^4) [N/m^2]."""
    _check_positive("L", L)
    return HBAR * C * math.pi**2 / (240.0 * L**4)


def ideal_energy_per_area(L: float) -> float:
    """hbar c pi^2 / (720 L^3) [J/m^2]."""
    _check_positive("L", L)
    return HBAR * C * math.pi**2 / (720.0 * L**3)


def ideal_force(L: float, A: float) -> float:
    """Perfect-mirror attraction at T = 0 [N]; scales as 1/L^4."""
    _check_positive("A", A)
    return A * ideal_force_per_area(L)


def ideal_energy(L: float, A: float) -> float:
    """Perfect-mirror binding-energy magnitude at T = 0 [J]; equals F L / 3."""
    _check_positive("A", A)
    return A * ideal_energy_per_area(L)


# --- configuration and result records --------------------------------------


@dataclass(frozen=True)
class CavityConfig:
    """Plane-plane cavity: distance L, area A, temperature, mirror pair."""

    L: float
    A: float
    temperature: float
    mirrors: CavityReflection

    def __post_init__(self):
        _check_positive("L", self.L)
        _check_positive("A", self.A)
        if not (math.isfinite(self.temperature) and self.temperature >= 0.0):
            raise DomainError(f"temperature must be finite and >= 0, got {self.temperature!r}")

    @property
    def plane_limit_ok(self) -> bool:
        """Large-plate condition A >> L^2, checked as A > 100 L^2."""
        return self.A > 100.0 * self.L**2

    @property
    def thermal_state(self) -> ThermalState:
        return ThermalState(self.temperature)

    @classmethod
    def symmetric(cls, L: float, A: float, temperature: float, mirror: Mirror) -> "CavityConfig":
        return cls(L=L, A=A, temperature=temperature, mirrors=CavityReflection(mirror, mirror))


@dataclass(frozen=True)
class ForceResult:
    """Plane-plane observables with correction factors and error estimate.

    force [N] is positive for attraction, energy [J] positive as the
    binding-energy magnitude; eta_E = energy / ideal_energy and
    eta_F = force / ideal_force.  numerical_error is the relative upper
    estimate accumulated by the quadrature and summation routines (0 for
    closed forms).  eta_T = F(T)/F(0) is attached by the thermal path.
    """

    force: float
    energy: float
    eta_E: float
    eta_F: float
    numerical_error: float
    flags: tuple[str, ...] = ()
    eta_T: float | None = None


@dataclass(frozen=True)
class SpherePlaneConfig:
    """Sphere of radius R above a plane at closest approach L."""

    R: float
    L: float
    temperature: float
    mirrors: CavityReflection

    def __post_init__(self):
        _check_positive("R", self.R)
        _check_positive("L", self.L)
        if not (math.isfinite(self.temperature) and self.temperature >= 0.0):
            raise DomainError(f"temperature must be finite and >= 0, got {self.temperature!r}")

    @property
    def proximity_ok(self) -> bool:
        """Proximity-mapping condition R >> L, checked as R > 100 L."""
        return self.R > 100.0 * self.L


@dataclass(frozen=True)
class SpherePlaneResult:
    """Proximity-theorem force 2 pi R E_pp(L)/A and the plane-plane eta."""

    force: float
    eta: float
    plane_energy_per_area: float
    numerical_error: float
    flags: tuple[str, ...] = ()


# --- spectral kernels -------------------------------------------------------


def _kernels(r_te, r_tm, u):
    """Polarization-summed energy and force kernels at exp(-u)."""
    emu = np.exp(-u)
    x_te = r_te * emu
    x_tm = r_tm * emu
    g_e = -(np.log1p(-x_te) + np.log1p(-x_tm))
    g_f = x_te / (1.0 - x_te) + x_tm / (1.0 - x_tm)
    return g_e, g_f


def _zero_temperature_per_area(cavity: CavityReflection, L: float):
    """(E/A, F/A, relative error) at T = 0 by the (u, phi) double quadrature."""
    worst_inner = [0.0]

    def outer_integrand(phis):
        rows = np.empty((phis.size, 2))
        for i, phi in enumerate(phis):
            cos_phi = math.cos(phi)
            sin_phi = math.sin(phi)

            def inner(u):
                xi = (0.5 * C / L) * cos_phi * u
                k = (0.5 / L) * sin_phi * u
                g_e, g_f = _kernels(
                    cavity.amplitude_imaginary(xi, k, Polarization.TE),
                    cavity.amplitude_imaginary(xi, k, Polarization.TM),
                    u,
                )
                u2 = u * u
                return np.stack([u2 * g_e, u2 * u * g_f], axis=-1)

            res = adaptive_gauss_legendre(inner, 0.0, _U_SPAN, rel_tol=_INNER_REL_TOL)
            if not res.converged:
                raise ConvergenceError(
                    f"inner u-quadrature did not converge at phi={phi:.6f} "
                    f"(L={L:.3e} m, error estimate {res.error})"
                )
            scale = np.abs(res.value)
            scale[scale == 0.0] = 1.0
            worst_inner[0] = max(worst_inner[0], float(np.max(res.error / scale)))
            rows[i] = sin_phi * res.value
        return rows

    outer = adaptive_gauss_legendre(outer_integrand, 0.0, 0.5 * math.pi, rel_tol=_OUTER_REL_TOL)
    if not outer.converged:
        raise ConvergenceError(
            f"angular quadrature did not converge (L={L:.3e} m, error estimate {outer.error})"
        )

    j_e, j_f = outer.value
    prefactor = HBAR * C / (32.0 * math.pi**2)
    e_per_area = prefactor * j_e / L**3
    f_per_area = prefactor * j_f / L**4

    scale = np.abs(outer.value)
    scale[scale == 0.0] = 1.0
    rel_err = float(np.max(outer.error / scale)) + worst_inner[0]
    return e_per_area, f_per_area, rel_err


def _matsubara_per_area(cavity: CavityReflection, L: float, state: ThermalState):
    """(E/A, F/A, relative error, contributing terms) of the Matsubara sum."""
    theta = state.temperature_frequency
    du = 2.0 * theta * L / C  # spacing of u_n = 2 xi_n L / c

    totals = np.zeros(2)
    quad_err = np.zeros(2)
    term_mags: list[float] = []

    n = 0
    while True:
        u_n = n * du

        def integrand(u, n=n, u_n=u_n):
            if n == 0:
                k = (0.5 / L) * u
                r_te = cavity.amplitude_static(k, Polarization.TE)
                r_tm = cavity.amplitude_static(k, Polarization.TM)
            else:
                xi = n * theta
                k = (0.5 / L) * np.sqrt(np.maximum(u * u - u_n * u_n, 0.0))
                r_te = cavity.amplitude_imaginary(xi, k, Polarization.TE)
                r_tm = cavity.amplitude_imaginary(xi, k, Polarization.TM)
            g_e, g_f = _kernels(r_te, r_tm, u)
            return np.stack([u * g_e, u * u * g_f], axis=-1)

        res = adaptive_gauss_legendre(integrand, u_n, u_n + _U_SPAN, rel_tol=_INNER_REL_TOL)
        if not res.converged:
            raise ConvergenceError(
                f"Matsubara term n={n} did not converge (L={L:.3e} m, T={state.temperature} K)"
            )
        weight = 0.5 if n == 0 else 1.0
        term = weight * res.value
        totals += term
        quad_err += weight * res.error
        term_mags.append(float(np.max(np.abs(term))))

        total_scale = float(np.max(np.abs(totals)))
        if n + 1 >= _MATSUBARA_MIN_TERMS and total_scale > 0.0:
            last_rel = term_mags[-1] / total_scale
            if last_rel < _MATSUBARA_TERM_REL:
                # geometric bound on the dropped tail; the decay rate is at
                # least exp(-du) per index, estimated from the last two terms
                ratio = math.exp(-du)
                if term_mags[-2] > 0.0:
                    ratio = max(ratio, term_mags[-1] / term_mags[-2])
                ratio = min(ratio, 0.999)
                tail_rel = last_rel * ratio / (1.0 - ratio)
                if tail_rel < _MATSUBARA_TERM_REL:
                    break
        if n + 1 >= _MATSUBARA_MIN_TERMS and total_scale == 0.0:
            tail_rel = 0.0
            break
        n += 1
        if n > _MATSUBARA_MAX_TERMS:
            raise ConvergenceError(
                f"Matsubara sum exceeded {_MATSUBARA_MAX_TERMS} terms "
                f"(L={L:.3e} m, T={state.temperature} K)"
            )

    contributing = sum(
        1 for m in term_mags if m >= _MATSUBARA_TERM_REL * max(float(np.max(np.abs(totals))), 1e-300)
    )

    e_per_area = (K_B * state.temperature / (8.0 * math.pi)) * totals[0] / L**2
    f_per_area = (K_B * state.temperature / (8.0 * math.pi)) * totals[1] / L**3

    scale = np.abs(totals)
    scale[scale == 0.0] = 1.0
    rel_err = float(np.max(quad_err / scale)) + tail_rel
    return e_per_area, f_per_area, rel_err, contributing


# --- public operations ------------------------------------------------------


def _area_flags(config: CavityConfig) -> tuple[str, ...]:
    return () if config.plane_limit_ok else (FLAG_PLANE_LIMIT,)


def _plane_result_zero_t(config: CavityConfig) -> ForceResult:
    flags = _area_flags(config)
    if config.mirrors.both_perfect:
        return ForceResult(
            force=ideal_force(config.L, config.A),
            energy=ideal_energy(config.L, config.A),
            eta_E=1.0,
            eta_F=1.0,
            numerical_error=0.0,
            flags=flags,
        )
    e_per_area, f_per_area, rel_err = _zero_temperature_per_area(config.mirrors, config.L)
    if rel_err > _ERROR_CEILING:
        raise ConvergenceError(f"error estimate {rel_err:.2e} above ceiling {_ERROR_CEILING:.0e}")
    return ForceResult(
        force=config.A * f_per_area,
        energy=config.A * e_per_area,
        eta_E=e_per_area / ideal_energy_per_area(config.L),
        eta_F=f_per_area / ideal_force_per_area(config.L),
        numerical_error=rel_err,
        flags=flags,
    )


def real_mirror_energy(config: CavityConfig) -> ForceResult:
    """Zero-temperature energy (and force) of a real-mirror cavity.

    Perfect pairs route to the closed forms; anything else goes through
    the imaginary-axis quadrature.  Requires config.temperature == 0; use
    ``thermal_force`` for finite temperature.
    """
    if config.temperature != 0.0:
        raise DomainError("real_mirror_energy requires temperature == 0; use thermal_force")
    return _plane_result_zero_t(config)


def real_mirror_force(config: CavityConfig) -> ForceResult:
    """Zero-temperature force (and energy); see ``real_mirror_energy``."""
    if config.temperature != 0.0:
        raise DomainError("real_mirror_force requires temperature == 0; use thermal_force")
    return _plane_result_zero_t(config)


def _thermal_result(config: CavityConfig) -> ForceResult:
    if config.temperature == 0.0:
        return _plane_result_zero_t(config)

    e_per_area, f_per_area, rel_err, contributing = _matsubara_per_area(
        config.mirrors, config.L, config.thermal_state
    )
    if rel_err > _ERROR_CEILING:
        raise ConvergenceError(f"error estimate {rel_err:.2e} above ceiling {_ERROR_CEILING:.0e}")

    flags = _area_flags(config)
    if contributing < _FEW_TERMS_WARN:
        flags = flags + (FLAG_FEW_MATSUBARA,)

    base = _plane_result_zero_t(dataclasses.replace(config, temperature=0.0))
    return ForceResult(
        force=config.A * f_per_area,
        energy=config.A * e_per_area,
        eta_E=e_per_area / ideal_energy_per_area(config.L),
        eta_F=f_per_area / ideal_force_per_area(config.L),
        numerical_error=rel_err,
        flags=flags,
        eta_T=config.A * f_per_area / base.force,
    )


def thermal_force(config: CavityConfig) -> ForceResult:
    """Finite-temperature force (and free energy) via the Matsubara sum.

    T = 0 reduces exactly to ``real_mirror_force``.  The result carries
    eta_T = F(T)/F(0) and warns when fewer than 10 Matsubara terms
    contribute (large-T or large-L regime).
    """
    return _thermal_result(config)


def thermal_energy(config: CavityConfig) -> ForceResult:
    """Finite-temperature free energy (and force); same record as
    ``thermal_force``, provided for callers whose primary output is the
    energy correction factor."""
    return _thermal_result(config)


# --- correction-factor sweep -------------------------------------------------


@dataclass(frozen=True)
class EtaSweepResult:
    """Log-spaced eta_E curves: conduction-only, thermal-only, combined,
    and the product of the two single-effect columns."""

    lengths: np.ndarray
    eta_plasma: np.ndarray
    eta_thermal: np.ndarray
    eta_full: np.ndarray

    @property
    def eta_product(self) -> np.ndarray:
        return self.eta_plasma * self.eta_thermal

    def rows(self):
        return zip(self.lengths, self.eta_plasma, self.eta_thermal, self.eta_full, self.eta_product)


def eta_sweep(
    L_min: float,
    L_max: float,
    points: int,
    mirror: Mirror,
    temperature: float,
    A: float = 1.0,
) -> EtaSweepResult:
    """Sweep the energy correction factors over log-spaced distances.

    eta_plasma is evaluated at T = 0 with the given mirror on both plates,
    eta_thermal with perfect mirrors at the given temperature, eta_full
    with both effects at once.  The combined correction is approximately
    the product of the two single-effect columns because the two effects
    matter in non-overlapping distance ranges.
    """
    _check_positive("L_min", L_min)
    _check_positive("L_max", L_max)
    if not L_min < L_max:
        raise DomainError(f"need L_min < L_max, got [{L_min!r}, {L_max!r}]")
    if points < 2:
        raise DomainError(f"points must be >= 2, got {points!r}")

    perfect = PerfectMirror()
    is_perfect = isinstance(mirror, PerfectMirror)
    lengths = np.geomspace(L_min, L_max, points)
    eta_plasma = np.ones(points)
    eta_thermal = np.ones(points)
    eta_full = np.ones(points)

    for i, L in enumerate(lengths):
        L = float(L)
        if not is_perfect:
            eta_plasma[i] = _plane_result_zero_t(CavityConfig.symmetric(L, A, 0.0, mirror)).eta_E
        if temperature > 0.0:
            eta_thermal[i] = _thermal_result(CavityConfig.symmetric(L, A, temperature, perfect)).eta_E
        if is_perfect:
            eta_full[i] = eta_thermal[i]
        elif temperature == 0.0:
            eta_full[i] = eta_plasma[i]
        else:
            eta_full[i] = _thermal_result(CavityConfig.symmetric(L, A, temperature, mirror)).eta_E

    return EtaSweepResult(
        lengths=lengths, eta_plasma=eta_plasma, eta_thermal=eta_thermal, eta_full=eta_full
    )


# --- sphere-plane proximity mapping ------------------------------------------


def sphere_plane_force(config: SpherePlaneConfig) -> SpherePlaneResult:
    """Proximity-theorem sphere-plane force F = 2 pi R * E_pp(L)/A.

    E_pp/A is the plane-plane energy per unit area at the closest-approach
    distance, same mirrors and temperature, so the returned eta equals the
    plane-plane eta_E at that distance.  The 2 pi R prefactor is the
    standard Derjaguin coefficient of the mapping.
    """
    flags: tuple[str, ...] = () if config.proximity_ok else (FLAG_PROXIMITY,)

    if config.temperature == 0.0 and config.mirrors.both_perfect:
        e_per_area = ideal_energy_per_area(config.L)
        rel_err = 0.0
    elif config.temperature == 0.0:
        e_per_area, _, rel_err = _zero_temperature_per_area(config.mirrors, config.L)
    else:
        e_per_area, _, rel_err, contributing = _matsubara_per_area(
            config.mirrors, config.L, ThermalState(config.temperature)
        )
        if contributing < _FEW_TERMS_WARN:
            flags = flags + (FLAG_FEW_MATSUBARA,)
    if rel_err > _ERROR_CEILING:
        raise ConvergenceError(f"error estimate {rel_err:.2e} above ceiling {_ERROR_CEILING:.0e}")

    return SpherePlaneResult(
        force=2.0 * math.pi * config.R * e_per_area,
        eta=e_per_area / ideal_energy_per_area(config.L),
        plane_energy_per_area=e_per_area,
        numerical_error=rel_err,
        flags=flags,
    )
