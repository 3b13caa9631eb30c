"""
    ``limbkit size``: drivetrain feasibility of the configured motor and ball screw.
"""
import argparse

from limbkit.actuator import check_feasibility
from limbkit.commands.common import add_common_arguments, output_dir, resolve_config
from limbkit.utils.export import write_json


def add_subparser(sub: argparse._SubParsersAction):
    parser = sub.add_parser("size", help="Check motor and ball screw against the design load and speed",
                            description="Evaluate the screw torque and speed requirements, the retraction time and "
                                        "the nut capacity. Exits 2 when the design is infeasible.")
    add_common_arguments(parser)
    parser.add_argument("--body-weight", help="Body weight, e.g. '200 lbf'")
    parser.add_argument("--load-factor", type=float, help="Peak leg load over body weight")
    parser.add_argument("--linear-speed", help="Required nut speed, e.g. '18000 mm/min'")
    parser.add_argument("--rated-load", help="Rated axial load of the nut, e.g. '350 lbf'")
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    sizing = {key: value for key, value in (("body_weight", args.body_weight), ("load_factor", args.load_factor),
                                            ("linear_speed", args.linear_speed)) if value is not None}
    overrides = {"sizing": sizing}
    if args.rated_load is not None:
        overrides["screw"] = {"rated_load": args.rated_load}
    config = resolve_config(args, overrides)

    inputs = config.sizing
    report = check_feasibility(inputs.design_load, inputs.linear_speed, inputs.effective_travel, config.screw,
                               config.motor)

    print(f"Design load      : {inputs.design_load.to('N'):.1f} ({inputs.design_load.to('lbf'):.1f})")
    print(f"Required torque  : {report.required_torque.to('N*m'):.3f} "
          f"(motor {config.motor.operating_torque.to('N*m'):.2f}, margin {report.torque_margin:.2f})")
    print(f"Required speed   : {report.required_speed.to('rpm'):.0f} "
          f"(motor {config.motor.operating_speed.to('rpm'):.0f}, margin {report.speed_margin:.2f})")
    print(f"Retraction time  : {report.retraction_time.to('s'):.3f}")
    print(f"Nut load margin  : {report.load_margin:.2f}")
    print(f"Power            : required {report.required_power.to('W'):.0f}, motor {report.motor_power.to('W'):.0f}")
    motor_mass = config.motor.mass.m_as("kg")
    print(f"Motor weight     : {motor_mass:.1f} kg, {config.geometry.weight_fraction(motor_mass):.0%} of the "
          f"{config.geometry.overall_weight:.0f} kg budget")
    print(f"Length           : {config.geometry.resting_length * 1e3:.0f} mm resting, "
          f"{config.geometry.extended_length * 1e3:.0f} mm extended")
    print(f"Feasible         : {'yes' if report.feasible else 'NO'}")

    record = dict(report.to_record(), design_load_n=inputs.design_load.m_as("N"),
                  motor_weight_fraction=config.geometry.weight_fraction(motor_mass), geometry=config.geometry.to_record())
    write_json(record, output_dir(args, config) / "sizing.json")

    return 0 if report.feasible else 2
