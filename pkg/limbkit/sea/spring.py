"""
    Series spring selection: a high spring constant raises force bandwidth, a low one lowers output impedance. The
    operational bandwidth target bounds k_s from below, the tolerable impedance bounds it from above.
"""
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from scipy.optimize import brentq

from limbkit.errors import InvalidInput
from limbkit.sea.controller import ForceController
from limbkit.sea.frequency import analytic_bandwidth, closed_loop_impedance
from limbkit.sea.plant import SeaPlant

DEFAULT_STIFFNESS_RANGE = (1e4, 5e6)        # N/m


@dataclass(frozen=True)
class SpringWindow:
    lower: Optional[float]                  # N/m, None when no stiffness in range meets the bandwidth target
    upper: Optional[float]                  # N/m, None when every stiffness in range exceeds the impedance ceiling
    target_bandwidth_hz: float
    max_impedance: float                    # N/m
    impedance_frequency_hz: float

    @property
    def feasible(self) -> bool:
        return self.lower is not None and self.upper is not None and self.lower <= self.upper

    def contains(self, spring_stiffness: float) -> bool:
        return self.feasible and self.lower <= spring_stiffness <= self.upper

    def to_record(self) -> dict:
        return {
            "lower_n_per_m": self.lower,
            "upper_n_per_m": self.upper,
            "feasible": self.feasible,
            "target_bandwidth_hz": self.target_bandwidth_hz,
            "max_impedance_n_per_m": self.max_impedance,
            "impedance_frequency_hz": self.impedance_frequency_hz,
        }


def _bandwidth(plant: SeaPlant, ctrl: ForceController, k: float) -> float:
    bandwidth = analytic_bandwidth(plant.with_stiffness(k), ctrl)
    return bandwidth if bandwidth is not None else 0.0


def _impedance(plant: SeaPlant, ctrl: ForceController, k: float, omega: float) -> float:
    return float(closed_loop_impedance(plant.with_stiffness(k), ctrl, np.array([omega]))[0])


def _threshold(func, target: float, k_range: Tuple[float, float]) -> float:
    # root in log k, func increasing in k
    low, high = math.log(k_range[0]), math.log(k_range[1])
    return math.exp(brentq(lambda x: func(math.exp(x)) - target, low, high, xtol=1e-6))


def spring_window(plant: SeaPlant, ctrl: ForceController, target_bandwidth_hz: float, max_impedance: float,
                  impedance_frequency_hz: float, k_range: Tuple[float, float] = DEFAULT_STIFFNESS_RANGE) -> SpringWindow:
    """
        Range of spring stiffness meeting both guidelines on the linearized loop.
    :param plant: Plant, its spring_stiffness is ignored
    :param ctrl: Force controller with fixed gains
    :param target_bandwidth_hz: Required force bandwidth
    :param max_impedance: Highest tolerable output impedance in N/m at ``impedance_frequency_hz``
    :param impedance_frequency_hz: Frequency at which the impedance ceiling applies
    :param k_range: Searched stiffness range in N/m
    :return: SpringWindow
    """
    if not (target_bandwidth_hz > 0 and max_impedance > 0 and impedance_frequency_hz > 0):
        raise InvalidInput("bandwidth target, impedance ceiling and impedance frequency must be positive")
    if not 0 < k_range[0] < k_range[1]:
        raise InvalidInput("k_range must satisfy 0 < low < high")

    omega = 2.0 * math.pi * impedance_frequency_hz

    def bandwidth(k):
        return _bandwidth(plant, ctrl, k)

    def impedance(k):
        return _impedance(plant, ctrl, k, omega)

    if bandwidth(k_range[0]) >= target_bandwidth_hz:
        lower = k_range[0]
    elif bandwidth(k_range[1]) < target_bandwidth_hz:
        lower = None
    else:
        lower = _threshold(bandwidth, target_bandwidth_hz, k_range)

    if impedance(k_range[1]) <= max_impedance:
        upper = k_range[1]
    elif impedance(k_range[0]) > max_impedance:
        upper = None
    else:
        upper = _threshold(impedance, max_impedance, k_range)

    return SpringWindow(lower, upper, target_bandwidth_hz, max_impedance, impedance_frequency_hz)
