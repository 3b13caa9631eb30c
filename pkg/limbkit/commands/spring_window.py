"""
    ``limbkit spring-window``: range of spring stiffness meeting a bandwidth target and an impedance ceiling.
"""
import argparse

from limbkit.commands.common import add_common_arguments, output_dir, resolve_config
from limbkit.sea import spring_window
from limbkit.utils.export import write_json


def add_subparser(sub: argparse._SubParsersAction):
    parser = sub.add_parser("spring-window", help="Bound the spring stiffness from both guidelines",
                            description="Lower bound from the force bandwidth target, upper bound from the output "
                                        "impedance ceiling, both on the linearized closed loop. Exits 2 when no "
                                        "stiffness meets both.")
    add_common_arguments(parser)
    parser.add_argument("--bandwidth", help="Required force bandwidth, e.g. '40 Hz'")
    parser.add_argument("--max-impedance", help="Impedance ceiling, e.g. '400 kN/m'")
    parser.add_argument("--at", dest="frequency", help="Frequency of the impedance ceiling, e.g. '50 Hz'")
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    window = {key: value for key, value in (("target_bandwidth", args.bandwidth), ("max_impedance", args.max_impedance),
                                            ("impedance_frequency", args.frequency)) if value is not None}
    config = resolve_config(args, {"spring_window": window})

    result = spring_window(config.plant(), config.controller, config.window_bandwidth_hz,
                           config.window_max_impedance, config.window_frequency_hz)
    record = dict(result.to_record(), configured_stiffness_n_per_m=config.spring_stiffness,
                  configured_inside=result.contains(config.spring_stiffness))
    write_json(record, output_dir(args, config) / "spring_window.json")

    def kn(value):
        return "none" if value is None else f"{value / 1000.0:.1f} kN/m"

    print(f"Lower bound (bandwidth >= {config.window_bandwidth_hz:g} Hz): {kn(result.lower)}")
    print(f"Upper bound (|Z| <= {config.window_max_impedance / 1000.0:g} kN/m at {config.window_frequency_hz:g} Hz): "
          f"{kn(result.upper)}")
    print(f"Configured spring {kn(config.spring_stiffness)}: {'inside' if record['configured_inside'] else 'outside'}")

    return 0 if result.feasible else 2
