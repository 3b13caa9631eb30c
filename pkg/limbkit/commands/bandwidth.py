"""
    ``limbkit bandwidth``: force bandwidth and output impedance against spring stiffness.
"""
import argparse

import pandas as pd

from limbkit.commands.common import add_common_arguments, output_dir, resolve_config
from limbkit.config import stiffness_values
from limbkit.utils.export import write_csv
from limbkit.utils.runners import run_bandwidth_study


def add_subparser(sub: argparse._SubParsersAction):
    parser = sub.add_parser("bandwidth", help="Sweep force bandwidth over spring stiffness",
                            description="Run a sinusoidal force sweep against a locked load for each spring "
                                        "stiffness and measure the low-frequency output impedance. Exits 3 when a "
                                        "simulation diverges.")
    add_common_arguments(parser)
    parser.add_argument("--ks", nargs="+", help="Spring stiffnesses; bare numbers are kN/m, e.g. --ks 100 315 600")
    parser.add_argument("--amplitude", help="Force command amplitude, e.g. '10 N' (default: sweep.force_amplitude)")
    parser.set_defaults(func=run)


def _hz(value) -> str:
    return "none" if pd.isna(value) else f"{value:.2f}"


def run(args: argparse.Namespace) -> int:
    overrides = {"sweep": {"force_amplitude": args.amplitude}} if args.amplitude is not None else {}
    config = resolve_config(args, overrides)
    stiffness_list = stiffness_values(args.ks) if args.ks is not None else config.stiffness_list

    responses, table = run_bandwidth_study(config, stiffness_list)

    out = output_dir(args, config)
    for k, response in responses.items():
        write_csv(response.to_frame(), out / f"frequency_response_{k / 1000.0:g}kN_m.csv")
    write_csv(table, out / "bandwidth_table.csv")

    print(f"{'k_s [kN/m]':>12} {'bandwidth [Hz]':>15} {'analytic [Hz]':>14} {'|Z| [N/m]':>12}")
    for row in table.itertuples(index=False):
        measured, analytic = _hz(row.bandwidth_hz), _hz(row.analytic_bandwidth_hz)
        print(f"{row.stiffness_n_per_m / 1000.0:>12g} {measured:>15} {analytic:>14} "
              f"{row.low_freq_impedance_n_per_m:>12.1f}")

    return 0
