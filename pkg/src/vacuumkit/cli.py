"""Command-line front end.

Units at the boundary: lengths and radii in micrometers, plane areas in
cm^2, mirror areas of the motional commands in m^2, temperatures in
kelvin, frequencies in rad/s.  Everything is converted to SI at the edge
and the engine works in SI throughout.

Output is machine readable.  CSV uses a header row, one "%.8e" value per
cell (9 significant digits, "." decimal separator) and newline-terminated
rows.  JSON emits one object {inputs, outputs, flags, numerical_error,
version} with sorted keys.  Identical flags (and seed, where applicable)
give byte-identical output.

Materials are selected as "perfect", "plasma:<wavelength in nm>", or a
preset name.  Presets ship as gold = 136 and copper = 136 (nm) and can be
extended through a file of "name = <nm>" lines pointed at by the
VACUUMKIT_MATERIALS environment variable.

Exit codes: 0 success, 2 argument or domain error, 3 numerical
non-convergence.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable

from . import __version__
from .casimir import (
    CavityConfig,
    SpherePlaneConfig,
    eta_sweep,
    ideal_energy,
    ideal_force,
    sphere_plane_force,
    thermal_force,
)
from .errors import ConvergenceError, DomainError
from .mirrors import CavityReflection, Mirror, PerfectMirror, PlasmaMirror, material_table
from .motional import (
    Trajectory,
    motional_force_time_domain,
    thermal_friction_force,
    thermal_susceptibility,
    vacuum_susceptibility,
)
from .photon_noise import (
    BeamSplitterSetup,
    difference_variance,
    fano_factor,
    make_squeezed,
    monte_carlo_difference,
)
from .planck import (
    ThermalState,
    blackbody_energy_density,
    energy_density,
    mean_photon_number,
    mode_energy_first_law,
    mode_energy_second_law,
    thermal_weight,
)

_UM = 1e-6
_CM2 = 1e-4


def _fmt(x: float) -> str:
    return f"{x:.8e}"


def resolve_material(text: str) -> Mirror:
    """Map a material selector to a mirror model."""
    if text == "perfect":
        return PerfectMirror()
    if text.startswith("plasma:"):
        try:
            nm = float(text.split(":", 1)[1])
        except ValueError as exc:
            raise DomainError(f"bad plasma wavelength in {text!r}") from exc
        return PlasmaMirror.from_wavelength(nm * 1e-9)
    table = material_table()
    if text in table:
        return PlasmaMirror.from_wavelength(table[text] * 1e-9)
    raise DomainError(
        f"unknown material {text!r}; use 'perfect', 'plasma:<nm>' or one of {sorted(table)}"
    )


def _write(stream, text: str) -> None:
    stream.write(text)
    stream.flush()


def _emit_json(stream, inputs: dict, outputs: dict, flags: Iterable[str], numerical_error: float) -> None:
    record = {
        "inputs": inputs,
        "outputs": outputs,
        "flags": sorted(flags),
        "numerical_error": numerical_error,
        "version": __version__,
    }
    _write(stream, json.dumps(record, sort_keys=True) + "\n")


def _emit_csv(stream, header: list[str], rows: list[list]) -> None:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_fmt(v) if isinstance(v, float) else str(v) for v in row))
    _write(stream, "\n".join(lines) + "\n")


def _emit(stream, fmt: str, inputs: dict, header: list[str], rows: list[list], outputs: dict,
          flags: Iterable[str] = (), numerical_error: float = 0.0) -> None:
    if fmt == "json":
        _emit_json(stream, inputs, outputs, flags, numerical_error)
    else:
        _emit_csv(stream, header, rows)


# --- subcommand handlers ----------------------------------------------------


def _cmd_ideal(args, stream) -> int:
    L = args.length_um * _UM
    A = args.area_cm2 * _CM2
    force = ideal_force(L, A)
    energy = ideal_energy(L, A)
    _emit(
        stream,
        args.format,
        inputs={"length_um": args.length_um, "area_cm2": args.area_cm2},
        header=["force_N", "energy_J"],
        rows=[[force, energy]],
        outputs={"force_N": force, "energy_J": energy},
    )
    return 0


def _cmd_force(args, stream) -> int:
    mirror = resolve_material(args.material)
    config = CavityConfig.symmetric(
        args.length_um * _UM, args.area_cm2 * _CM2, args.temperature_K, mirror
    )
    result = thermal_force(config)
    eta_t = 1.0 if result.eta_T is None else result.eta_T
    outputs = {
        "force_N": result.force,
        "energy_J": result.energy,
        "eta_E": result.eta_E,
        "eta_F": result.eta_F,
        "eta_T": eta_t,
    }
    _emit(
        stream,
        args.format,
        inputs={
            "length_um": args.length_um,
            "area_cm2": args.area_cm2,
            "temperature_K": args.temperature_K,
            "material": args.material,
        },
        header=["force_N", "energy_J", "eta_E", "eta_F", "eta_T", "numerical_error"],
        rows=[[result.force, result.energy, result.eta_E, result.eta_F, eta_t, result.numerical_error]],
        outputs=outputs,
        flags=result.flags,
        numerical_error=result.numerical_error,
    )
    return 0


def _cmd_eta(args, stream) -> int:
    mirror = resolve_material(args.material)
    sweep = eta_sweep(
        args.lmin_um * _UM, args.lmax_um * _UM, args.points, mirror, args.temperature_K
    )
    rows = [
        [L / _UM, ep, et, ef, eprod]
        for L, ep, et, ef, eprod in sweep.rows()
    ]
    _emit(
        stream,
        args.format,
        inputs={
            "lmin_um": args.lmin_um,
            "lmax_um": args.lmax_um,
            "points": args.points,
            "material": args.material,
            "temperature_K": args.temperature_K,
        },
        header=["L_um", "eta_plasma", "eta_thermal", "eta_full", "eta_product"],
        rows=rows,
        outputs={
            "L_um": [r[0] for r in rows],
            "eta_plasma": [r[1] for r in rows],
            "eta_thermal": [r[2] for r in rows],
            "eta_full": [r[3] for r in rows],
            "eta_product": [r[4] for r in rows],
        },
    )
    return 0


def _cmd_psphere(args, stream) -> int:
    mirror = resolve_material(args.material)
    config = SpherePlaneConfig(
        R=args.radius_um * _UM,
        L=args.length_um * _UM,
        temperature=args.temperature_K,
        mirrors=CavityReflection(mirror, mirror),
    )
    result = sphere_plane_force(config)
    _emit(
        stream,
        args.format,
        inputs={
            "radius_um": args.radius_um,
            "length_um": args.length_um,
            "temperature_K": args.temperature_K,
            "material": args.material,
        },
        header=["force_N", "eta_E", "plane_energy_per_area_J_m2", "numerical_error"],
        rows=[[result.force, result.eta, result.plane_energy_per_area, result.numerical_error]],
        outputs={
            "force_N": result.force,
            "eta_E": result.eta,
            "plane_energy_per_area_J_m2": result.plane_energy_per_area,
        },
        flags=result.flags,
        numerical_error=result.numerical_error,
    )
    return 0


def _cmd_motional(args, stream) -> int:
    traj = Trajectory.from_file(args.trajectory_file)
    state = ThermalState(args.temperature_K)
    vacuum = motional_force_time_domain(traj, args.area_m2)
    thermal = thermal_friction_force(traj, args.area_m2, state)
    times = traj.times
    rows = []
    for i in range(traj.n_samples):
        ok = bool(vacuum.valid[i])
        rows.append(
            [
                float(times[i]),
                float(traj.positions[i]),
                float(vacuum.force[i]) if ok else 0.0,
                float(thermal.force[i]) if ok else 0.0,
                int(ok),
            ]
        )
    _emit(
        stream,
        args.format,
        inputs={
            "trajectory_file": args.trajectory_file,
            "area_m2": args.area_m2,
            "temperature_K": args.temperature_K,
            "samples": traj.n_samples,
            "dt_s": traj.dt,
        },
        header=["t_s", "q_m", "force_vacuum_N", "force_thermal_N", "valid"],
        rows=rows,
        outputs={
            "t_s": [r[0] for r in rows],
            "q_m": [r[1] for r in rows],
            "force_vacuum_N": [r[2] for r in rows],
            "force_thermal_N": [r[3] for r in rows],
            "valid": [r[4] for r in rows],
        },
    )
    return 0


def _cmd_chi(args, stream) -> int:
    state = ThermalState(args.temperature_K)
    chi_vac, validity_vac = vacuum_susceptibility(args.omega, args.area_m2)
    chi_th, validity_th = thermal_susceptibility(args.omega, args.area_m2, state)
    flags = tuple(f"vacuum:{w}" for w in validity_vac.warnings()) + tuple(
        f"thermal:{w}" for w in validity_th.warnings()
    )
    outputs = {
        "chi_vacuum_im_N_per_m": chi_vac.value.imag,
        "chi_thermal_im_N_per_m": chi_th.value.imag,
    }
    _emit(
        stream,
        args.format,
        inputs={"omega_rad_s": args.omega, "area_m2": args.area_m2, "temperature_K": args.temperature_K},
        header=["chi_vacuum_im_N_per_m", "chi_thermal_im_N_per_m"],
        rows=[[chi_vac.value.imag, chi_th.value.imag]],
        outputs=outputs,
        flags=flags,
    )
    return 0


def _cmd_noise(args, stream) -> int:
    setup = BeamSplitterSetup(
        mean_photon_number_a=args.na, port_b=make_squeezed(1.0, args.squeeze)
    )
    mc = monte_carlo_difference(setup, args.trials, args.seed)
    flags = () if setup.linearized_ok else ("mean_photon_number_below_linear_regime",)
    outputs = {
        "fano_analytic": fano_factor(setup),
        "difference_variance_analytic": difference_variance(setup),
        "fano_empirical": mc.fano,
        "mean_empirical": mc.mean,
        "variance_empirical": mc.variance,
    }
    _emit(
        stream,
        args.format,
        inputs={"na": args.na, "squeeze": args.squeeze, "trials": args.trials, "seed": args.seed},
        header=[
            "fano_analytic",
            "difference_variance_analytic",
            "fano_empirical",
            "mean_empirical",
            "variance_empirical",
        ],
        rows=[[outputs[k] for k in (
            "fano_analytic",
            "difference_variance_analytic",
            "fano_empirical",
            "mean_empirical",
            "variance_empirical",
        )]],
        outputs=outputs,
        flags=flags,
    )
    return 0


def _cmd_planck(args, stream) -> int:
    state = ThermalState(args.temperature_K)
    outputs = {
        "mean_photon_number": mean_photon_number(args.omega, state),
        "energy_first_law_J": mode_energy_first_law(args.omega, state),
        "energy_second_law_J": mode_energy_second_law(args.omega, state),
        "thermal_weight": thermal_weight(args.omega, state),
    }
    _emit(
        stream,
        args.format,
        inputs={"omega_rad_s": args.omega, "temperature_K": args.temperature_K},
        header=["mean_photon_number", "energy_first_law_J", "energy_second_law_J", "thermal_weight"],
        rows=[[outputs[k] for k in (
            "mean_photon_number", "energy_first_law_J", "energy_second_law_J", "thermal_weight"
        )]],
        outputs=outputs,
    )
    return 0


def _cmd_density(args, stream) -> int:
    state = ThermalState(args.temperature_K)
    density = energy_density(args.omega_max, state)
    blackbody = blackbody_energy_density(state)
    outputs = {
        "vacuum_J_per_m3": density.vacuum,
        "thermal_J_per_m3": density.thermal,
        "total_J_per_m3": density.total,
        "blackbody_J_per_m3": blackbody,
    }
    _emit(
        stream,
        args.format,
        inputs={"omega_max_rad_s": args.omega_max, "temperature_K": args.temperature_K},
        header=["vacuum_J_per_m3", "thermal_J_per_m3", "total_J_per_m3", "blackbody_J_per_m3"],
        rows=[[outputs[k] for k in (
            "vacuum_J_per_m3", "thermal_J_per_m3", "total_J_per_m3", "blackbody_J_per_m3"
        )]],
        outputs=outputs,
    )
    return 0


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vacuumkit",
        description="Quantum-vacuum observables: Casimir forces, vacuum friction, photon noise.",
    )
    parser.add_argument("--version", action="version", version=f"vacuumkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("csv", "json"), default=None,
                       help="output format (default depends on the subcommand)")
        p.add_argument("--output", default=None, help="output file (default: stdout)")

    p = sub.add_parser("ideal", help="perfect-mirror force and energy at T = 0")
    p.add_argument("--length-um", type=float, required=True, help="plate distance [um]")
    p.add_argument("--area-cm2", type=float, required=True, help="plate area [cm^2]")
    add_common(p)
    p.set_defaults(handler=_cmd_ideal, default_format="json")

    p = sub.add_parser("force", help="real-mirror force with temperature correction")
    p.add_argument("--length-um", type=float, required=True)
    p.add_argument("--area-cm2", type=float, required=True)
    p.add_argument("--temperature-K", type=float, default=0.0)
    p.add_argument("--material", default="perfect",
                   help="perfect | plasma:<nm> | preset name (gold, copper, ...)")
    add_common(p)
    p.set_defaults(handler=_cmd_force, default_format="json")

    p = sub.add_parser("eta", help="correction-factor sweep over distance")
    p.add_argument("--lmin-um", type=float, required=True)
    p.add_argument("--lmax-um", type=float, required=True)
    p.add_argument("--points", type=int, default=100)
    p.add_argument("--material", default="gold")
    p.add_argument("--temperature-K", type=float, default=300.0)
    add_common(p)
    p.set_defaults(handler=_cmd_eta, default_format="csv")

    p = sub.add_parser("psphere", help="sphere-plane force by the proximity mapping")
    p.add_argument("--radius-um", type=float, required=True, help="sphere radius [um]")
    p.add_argument("--length-um", type=float, required=True, help="closest approach [um]")
    p.add_argument("--temperature-K", type=float, default=0.0)
    p.add_argument("--material", default="perfect")
    add_common(p)
    p.set_defaults(handler=_cmd_psphere, default_format="json")

    p = sub.add_parser("motional", help="time-domain reaction forces on a trajectory")
    p.add_argument("--trajectory-file", required=True,
                   help="two-column text file: time [s], position [m], uniform step")
    p.add_argument("--area-m2", type=float, required=True, help="mirror area [m^2]")
    p.add_argument("--temperature-K", type=float, default=0.0)
    add_common(p)
    p.set_defaults(handler=_cmd_motional, default_format="csv")

    p = sub.add_parser("chi", help="motional susceptibilities at one frequency")
    p.add_argument("--omega", type=float, required=True, help="motion frequency [rad/s]")
    p.add_argument("--area-m2", type=float, required=True)
    p.add_argument("--temperature-K", type=float, default=0.0)
    add_common(p)
    p.set_defaults(handler=_cmd_chi, default_format="json")

    p = sub.add_parser("noise", help="beam-splitter photon noise, analytic and Monte Carlo")
    p.add_argument("--na", type=float, default=1e6, help="mean photon number of port a")
    p.add_argument("--squeeze", type=float, default=1.0,
                   help="squeeze factor of port b (1 = vacuum)")
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, required=True, help="Monte-Carlo seed (mandatory)")
    add_common(p)
    p.set_defaults(handler=_cmd_noise, default_format="json")

    p = sub.add_parser("planck", help="per-mode energies and the thermal weight")
    p.add_argument("--omega", type=float, required=True, help="mode frequency [rad/s]")
    p.add_argument("--temperature-K", type=float, default=0.0)
    add_common(p)
    p.set_defaults(handler=_cmd_planck, default_format="json")

    p = sub.add_parser("density", help="cutoff energy density, vacuum and thermal parts")
    p.add_argument("--omega-max", type=float, required=True, help="frequency cutoff [rad/s]")
    p.add_argument("--temperature-K", type=float, default=0.0)
    add_common(p)
    p.set_defaults(handler=_cmd_density, default_format="json")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.format is None:
        args.format = args.default_format

    try:
        if args.output is None:
            return args.handler(args, sys.stdout)
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            return args.handler(args, fh)
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (DomainError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
