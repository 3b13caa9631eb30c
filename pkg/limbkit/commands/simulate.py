"""
    ``limbkit simulate``: closed-loop SEA run, trajectory CSV and summary.
"""
import argparse
import math

import numpy as np
import pandas as pd

from limbkit.commands.common import add_common_arguments, output_dir, resolve_config
from limbkit.config import ToolkitConfig
from limbkit.errors import InvalidInput
from limbkit.gait import gait_command
from limbkit.sea import LoadBoundary, Trajectory, simulate, sine_motion, step_command, table_command
from limbkit.units import quantity
from limbkit.utils.export import write_csv, write_json


def add_subparser(sub: argparse._SubParsersAction):
    parser = sub.add_parser("simulate", help="Simulate the force-controlled SEA",
                            description="Run the SEA under closed-loop force control and write the trajectory as "
                                        "CSV. Exits 3 when the simulation diverges.")
    add_common_arguments(parser)
    command = parser.add_mutually_exclusive_group()
    command.add_argument("--step", help="Step force command, e.g. '300 N' (default: simulation.step_force)")
    command.add_argument("--gait", action="store_true", help="Follow the gait stance load of the configured body")
    command.add_argument("--command-file", help="CSV with time_s and desired_force_n columns")
    parser.add_argument("--duration", help="Simulated time, e.g. '2 s' (default: simulation.duration)")
    parser.add_argument("--load", choices=[b.value for b in LoadBoundary], default=LoadBoundary.LOCKED.value,
                        help="Load boundary condition (default: locked)")
    parser.add_argument("--motion-amplitude", help="Load motion amplitude for prescribed-motion, e.g. '0.05 mm'")
    parser.add_argument("--motion-frequency", default="1 Hz", help="Load motion frequency for prescribed-motion")
    parser.add_argument("--ks", help="Spring stiffness, e.g. '315 kN/m'")
    parser.set_defaults(func=run)


def read_command_file(path: str):
    try:
        table = pd.read_csv(path, float_precision="round_trip")
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise InvalidInput(f"cannot read command file {path}: {e}") from e
    if not {"time_s", "desired_force_n"} <= set(table.columns):
        raise InvalidInput(f"command file {path} needs time_s and desired_force_n columns")

    return table_command(table["time_s"].to_numpy(float), table["desired_force_n"].to_numpy(float))


def summarize(trajectory: Trajectory, force_limit: float) -> dict:
    """
        Steady-state error over the last 10% of the run, peak deflection and saturation count.
    """
    n = len(trajectory)
    summary = {"samples": n, "saturation_count": trajectory.saturation_count, "force_limit_n": force_limit}
    if n == 0:
        return dict(summary, steady_state_error_n=None, steady_state_error_pct=None, peak_deflection_m=None,
                    peak_commanded_force_n=None)

    tail = slice(n - max(1, n // 10), n)
    achieved = float(np.mean(trajectory.true_force[tail]))
    desired = float(np.mean(trajectory.desired_force[tail]))
    error = achieved - desired

    return dict(summary,
                steady_state_error_n=error,
                steady_state_error_pct=100.0 * abs(error) / abs(desired) if desired != 0 else None,
                peak_deflection_m=float(np.max(np.abs(trajectory.deflection))),
                peak_commanded_force_n=float(np.max(np.abs(trajectory.commanded_force))))


def build_command(args: argparse.Namespace, config: ToolkitConfig):
    if args.gait:
        return gait_command(config.gait_profile()), "gait"
    if args.command_file:
        return read_command_file(args.command_file), f"file {args.command_file}"
    force = quantity(args.step, "force", "N").m_as("N") if args.step is not None else config.step_force

    return step_command(force), f"step {force} N"


def run(args: argparse.Namespace) -> int:
    overrides = {}
    if args.duration is not None:
        overrides["simulation"] = {"duration": args.duration}
    if args.ks is not None:
        overrides["spring"] = {"stiffness": args.ks}
    config = resolve_config(args, overrides)

    plant = config.plant()
    command, label = build_command(args, config)
    boundary = LoadBoundary(args.load)
    motion = None
    if boundary == LoadBoundary.PRESCRIBED:
        amplitude = quantity(args.motion_amplitude, "length").m_as("m") if args.motion_amplitude \
            else config.motion_amplitude
        omega = 2.0 * math.pi * quantity(args.motion_frequency, "frequency").m_as("Hz")
        motion = sine_motion(amplitude, omega)

    trajectory = simulate(plant, config.controller, config.sensor, command, boundary, dt=config.dt,
                          duration=config.duration, seed=config.seed, load_motion=motion, bound=config.bound)

    summary = dict(summarize(trajectory, plant.force_limit), command=label, load_boundary=boundary.value,
                   duration_s=config.duration, dt_s=config.dt, spring_stiffness_n_per_m=plant.spring_stiffness,
                   seed=config.seed)

    out = output_dir(args, config)
    write_csv(trajectory.to_frame(), out / "trajectory.csv")
    write_json(summary, out / "simulation_summary.json")

    print(f"Command            : {label}, {boundary.value} load, {config.duration} s")
    print(f"Samples            : {summary['samples']}")
    if summary["samples"]:
        pct = summary["steady_state_error_pct"]
        print(f"Steady-state error : {summary['steady_state_error_n']:.3f} N"
              + (f" ({pct:.3f} %)" if pct is not None else ""))
        print(f"Peak deflection    : {1000.0 * summary['peak_deflection_m']:.3f} mm")
    print(f"Saturated samples  : {summary['saturation_count']}")

    return 0
