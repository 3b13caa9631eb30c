"""
    ``limbkit gait``: gait cycle load and knee-travel profile.
"""
import argparse

from limbkit.commands.common import add_common_arguments, output_dir, resolve_config
from limbkit.units import quantity
from limbkit.utils.export import write_csv, write_json


def add_subparser(sub: argparse._SubParsersAction):
    parser = sub.add_parser("gait", help="Write one gait cycle of axial load and knee travel",
                            description="Sample the gait profile of the configured body over one stride and write it "
                                        "as CSV, with the phase table as JSON.")
    add_common_arguments(parser)
    parser.add_argument("--body-weight", help="Body weight, e.g. '200 lbf'")
    parser.add_argument("--load-factor", type=float, help="Peak leg load over body weight")
    parser.add_argument("--stride", help="Stride duration, e.g. '1 s'")
    parser.add_argument("--sample-rate", help="Profile sample rate, e.g. '100 Hz'")
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    sizing = {key: value for key, value in (("body_weight", args.body_weight), ("load_factor", args.load_factor))
              if value is not None}
    gait = {key: value for key, value in (("stride_duration", args.stride), ("sample_rate", args.sample_rate))
            if value is not None}
    config = resolve_config(args, {"sizing": sizing, "gait": gait})

    profile = config.gait_profile()
    frame = profile.to_frame(config.gait_sample_rate)
    phases = profile.phase_table()

    out = output_dir(args, config)
    write_csv(frame, out / "gait_profile.csv")
    write_json({"body_weight_n": profile.body_weight, "load_factor": profile.load_factor,
                "stride_duration_s": profile.stride_duration, "peak_load_n": profile.peak_load,
                "peak_travel_m": profile.peak_travel, "phases": phases}, out / "gait_phases.json")

    print(f"Peak axial load : {quantity(profile.peak_load, 'force'):.1f}")
    print(f"Peak knee travel: {quantity(profile.peak_travel, 'length').to('mm'):.1f}")
    for phase in phases:
        print(f"  {phase['name']:<22} {phase['start_s']:.3f} s - {phase['end_s']:.3f} s")

    return 0
