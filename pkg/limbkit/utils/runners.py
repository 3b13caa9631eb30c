"""
    Batch drivers: spring stiffness studies over the SEA and stress checks over every member and load case, each with a
    pandas summary.
"""
import logging
import math
from collections import defaultdict
from typing import Dict, List, Optional, Sequence, Tuple

import pandas as pd

from limbkit.config import ToolkitConfig
from limbkit.errors import InvalidInput
from limbkit.sea import FrequencyResponse, analytic_bandwidth, force_bandwidth, measure_impedance
from limbkit.stress import StressReport, run_all_cases
from limbkit.units import quantity
from limbkit.utils.reporter import get_reporter


def run_bandwidth_study(config: ToolkitConfig, stiffness_list: Sequence[float]) \
        -> Tuple[Dict[float, FrequencyResponse], pd.DataFrame]:
    """
        Force bandwidth sweep and low-frequency output impedance for each spring stiffness, all else fixed.
    :param config: ToolkitConfig
    :param stiffness_list: Spring stiffnesses in N/m
    :return: Responses per stiffness and a table with one row per stiffness
    """
    if len(stiffness_list) == 0:
        raise InvalidInput("the bandwidth study needs at least one spring stiffness")

    reporter = get_reporter()
    sensor = config.sweep_sensor()
    omega = 2.0 * math.pi * config.impedance_frequency_hz
    responses = {}
    rows = []

    for k in stiffness_list:
        reporter.log(logging.INFO, f"bandwidth sweep at k_s={k:.0f} N/m")
        plant = config.plant(k)
        response = force_bandwidth(plant, config.controller, sensor, config.force_amplitude, config.sweep)
        impedance = measure_impedance(plant, config.controller, sensor, config.motion_amplitude, omega, config.sweep)

        responses[k] = response
        rows.append({
            "stiffness_n_per_m": k,
            "bandwidth_hz": response.bandwidth_hz,
            "analytic_bandwidth_hz": analytic_bandwidth(plant, config.controller),
            "low_freq_impedance_n_per_m": impedance,
            "impedance_frequency_hz": config.impedance_frequency_hz,
        })

    return responses, pd.DataFrame(rows)


def run_stress_study(config: ToolkitConfig, case_names: Optional[Sequence[str]] = None,
                     yield_strength=None) -> List[StressReport]:
    """
        Stress reports of every configured member under the selected load cases.
    :param config: ToolkitConfig
    :param case_names: Load cases to keep, all when None
    :param yield_strength: Yield strength override for every member (Quantity or string)
    :return: StressReports, members outermost
    """
    cases = list(config.load_cases)
    if case_names:
        unknown = set(case_names) - {case.name for case in cases}
        if unknown:
            raise InvalidInput(f"unknown load case(s): {', '.join(sorted(unknown))}")
        cases = [case for case in cases if case.name in case_names]

    members = list(config.members)
    if yield_strength is not None:
        strength = quantity(yield_strength, "stress")
        members = [m.with_material(m.material.with_yield_strength(strength)) for m in members]

    return run_all_cases(members, cases)


def process_stress_results(reports: Sequence[StressReport]) -> pd.DataFrame:
    """
        Per member: worst utilization, the case that causes it, the lowest safety factor and safe/unsafe counts.
    """
    summary = defaultdict(lambda: defaultdict(int))
    for report in reports:
        stats = summary[report.member]
        if report.utilization >= stats.get("max_utilization", -1.0):
            stats["max_utilization"] = report.utilization
            stats["worst_case"] = report.case
            stats["min_safety_factor"] = report.safety_factor
        stats["safe" if report.safe else "unsafe"] += 1
        stats["count"] += 1

    column_order = ["max_utilization", "worst_case", "min_safety_factor", "count", "safe", "unsafe"]
    frame = pd.DataFrame(summary).T
    for column in column_order:
        if column not in frame:
            frame[column] = 0
    column_type = {"max_utilization": float, "min_safety_factor": float, "count": int, "safe": int, "unsafe": int}
    frame = frame.fillna(0)[column_order].astype(column_type)
    frame.index.name = "member"

    return frame.sort_values("max_utilization", ascending=False)
