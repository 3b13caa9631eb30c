"""
    ``limbkit stress``: Von Mises utilization of the frame members.
"""
import argparse

from limbkit.commands.common import add_common_arguments, output_dir, resolve_config
from limbkit.stress import CASE_NAMES, to_frame, worst_case
from limbkit.utils.export import write_csv, write_json
from limbkit.utils.runners import process_stress_results, run_stress_study


def add_subparser(sub: argparse._SubParsersAction):
    parser = sub.add_parser("stress", help="Check frame members under the gait load cases",
                            description="Evaluate axial, bending and shear stress of every member under every load "
                                        "case and compare the Von Mises stress with the yield strength. Exits 2 when "
                                        "any member is unsafe.")
    add_common_arguments(parser)
    parser.add_argument("--case", action="append", choices=CASE_NAMES,
                        help="Load case to check; repeat for several (default: all)")
    parser.add_argument("--yield-strength", help="Yield strength override for every member, e.g. '215 MPa'")
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    config = resolve_config(args)
    reports = run_stress_study(config, args.case, args.yield_strength)
    worst = worst_case(reports)
    members = process_stress_results(reports)

    out = output_dir(args, config)
    write_csv(to_frame(reports), out / "stress_reports.csv")
    write_csv(members.reset_index(), out / "stress_members.csv")
    write_json({"worst": worst.to_record(), "all_safe": all(r.safe for r in reports),
                "geometry": config.geometry.to_record()}, out / "stress_summary.json")

    print(f"{'member':<12} {'case':<22} {'von Mises [MPa]':>16} {'utilization':>12}")
    for report in reports:
        print(f"{report.member:<12} {report.case:<22} {report.von_mises / 1e6:>16.3f} {report.utilization:>12.4f}"
              + ("" if report.safe else "  UNSAFE"))
    print(f"Worst: {worst.member} under {worst.case}, utilization {worst.utilization:.4f}, "
          f"safety factor {worst.safety_factor:.2f}")

    return 0 if all(report.safe for report in reports) else 2
