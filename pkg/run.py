import json
import os
import time
from pathlib import Path

from limbkit.actuator import check_feasibility
from limbkit.config import load_config
from limbkit.sea import LoadBoundary, simulate, step_command
from limbkit.stress import to_frame, worst_case
from limbkit.utils.runners import process_stress_results, run_bandwidth_study, run_stress_study

RESULTS_DIR = Path("results", time.strftime('%Y%m%d-%H%M%S'))

# Configuration file to evaluate. None evaluates the built-in design (limbkit/data/prosthesis.json), or the file named
# by the LIMBKIT_CONFIG environment variable when it is set.
CONFIG_PATH = None

# create results directory if it does not exist
if not RESULTS_DIR.exists():
    os.makedirs(RESULTS_DIR)

config = load_config(CONFIG_PATH)

# drivetrain sizing
sizing = check_feasibility(config.sizing.design_load, config.sizing.linear_speed, config.sizing.effective_travel,
                           config.screw, config.motor)

# step response of the SEA against a locked load
trajectory = simulate(config.plant(), config.controller, config.sensor, step_command(config.step_force),
                      LoadBoundary.LOCKED, dt=config.dt, duration=config.duration, seed=config.seed, bound=config.bound)

# bandwidth against spring stiffness
_, bandwidth_table = run_bandwidth_study(config, config.stiffness_list)

# stress check of every member under every load case
reports = run_stress_study(config)
worst = worst_case(reports)

summary = {
    "sizing": sizing.to_record(),
    "step_final_force_n": float(trajectory.true_force[-1]) if len(trajectory) else None,
    "step_saturation_count": trajectory.saturation_count,
    "bandwidth_hz": dict(zip(bandwidth_table["stiffness_n_per_m"].astype(str), bandwidth_table["bandwidth_hz"])),
    "worst_stress": worst.to_record(),
}

# write results to file
trajectory.to_frame().to_csv(RESULTS_DIR.joinpath("step_trajectory.csv"), index=False)
bandwidth_table.to_csv(RESULTS_DIR.joinpath("bandwidth_table.csv"), index=False)
to_frame(reports).to_csv(RESULTS_DIR.joinpath("stress_reports.csv"), index=False)
process_stress_results(reports).to_csv(RESULTS_DIR.joinpath("stress_members.csv"))
with open(RESULTS_DIR.joinpath("design_summary.json"), "w", encoding="utf-8") as f:
    f.write(json.dumps(summary, indent=2))
