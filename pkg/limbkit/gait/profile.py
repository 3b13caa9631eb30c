"""
    Load and knee-travel profiles over one gait cycle, heel strike to heel strike.
"""
import math
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import numpy as np
import pandas as pd
from scipy.interpolate import PchipInterpolator

from limbkit.errors import InvalidInput
from limbkit.units import quantity

PHASE_NAMES = ("heel-strike", "foot-flat", "midstance", "opposite-heel-strike", "toe-off", "swing")

# (name, start, end) as fractions of the stride
DEFAULT_PHASES = (
    ("heel-strike", 0.00, 0.08),
    ("foot-flat", 0.08, 0.20),
    ("midstance", 0.20, 0.50),
    ("opposite-heel-strike", 0.50, 0.55),
    ("toe-off", 0.55, 0.60),
    ("swing", 0.60, 1.00),
)

EFFECTIVE_TRAVEL = 0.108                    # m
PHASE_DECIMALS = 12


@dataclass(frozen=True)
class GaitPhase:
    name: str
    start_fraction: float
    end_fraction: float

    def __post_init__(self):
        if self.name not in PHASE_NAMES:
            raise InvalidInput(f"unknown gait phase {self.name!r}")
        if not 0.0 <= self.start_fraction < self.end_fraction <= 1.0:
            raise InvalidInput(f"phase {self.name} needs 0 <= start < end <= 1")

    def contains(self, fraction: float) -> bool:
        if self.end_fraction == 1.0:
            return self.start_fraction <= fraction <= 1.0
        return self.start_fraction <= fraction < self.end_fraction

    def to_record(self) -> dict:
        return {"name": self.name, "start_fraction": self.start_fraction, "end_fraction": self.end_fraction}


def default_phases() -> Tuple[GaitPhase, ...]:
    return tuple(GaitPhase(*row) for row in DEFAULT_PHASES)


def check_partition(phases: Sequence[GaitPhase]):
    """
        Phases must tile [0, 1] in order, starting with heel strike and ending with swing.
    """
    if len(phases) == 0 or phases[0].name != "heel-strike" or phases[0].start_fraction != 0.0:
        raise InvalidInput("the gait cycle must begin with heel-strike at 0")
    if phases[-1].name != "swing" or phases[-1].end_fraction != 1.0:
        raise InvalidInput("the gait cycle must end with swing at 1")
    for previous, current in zip(phases, phases[1:]):
        if not math.isclose(previous.end_fraction, current.start_fraction, abs_tol=1e-12):
            raise InvalidInput(f"gap or overlap between {previous.name} and {current.name}")


@dataclass(frozen=True)
class LoadShape:
    """
        Stance load as a fraction of the peak: two humps and a midstance trough, placed at fractions of stance.
    """
    first_hump: Tuple[float, float] = (0.25, 1.0)
    trough: Tuple[float, float] = (0.5, 0.7)
    second_hump: Tuple[float, float] = (0.75, 1.0)

    def knots(self) -> Tuple[np.ndarray, np.ndarray]:
        x = np.array([0.0, self.first_hump[0], self.trough[0], self.second_hump[0], 1.0])
        y = np.array([0.0, self.first_hump[1], self.trough[1], self.second_hump[1], 0.0])
        if np.any(np.diff(x) <= 0) or np.any(y < 0):
            raise InvalidInput("load shape knots must be increasing with non-negative heights")
        if not (self.trough[1] <= min(self.first_hump[1], self.second_hump[1]) and max(y) > 0):
            raise InvalidInput("load shape needs a trough below both humps")

        return x, y / y.max()


@dataclass(frozen=True)
class GaitProfile:
    """
        One gait cycle. Forces are in N, lengths in m, times in s.
    """
    body_weight: float
    load_factor: float
    stride_duration: float
    phases: Tuple[GaitPhase, ...] = field(default_factory=default_phases)
    shape: LoadShape = field(default_factory=LoadShape)
    effective_travel: float = EFFECTIVE_TRAVEL
    travel_fraction: float = 0.5

    def __post_init__(self):
        if not self.body_weight > 0 or not self.stride_duration > 0:
            raise InvalidInput("body_weight and stride_duration must be positive")
        if self.load_factor < 0:
            raise InvalidInput("load_factor must not be negative")
        if not 0.0 <= self.travel_fraction <= 1.0 or self.effective_travel < 0:
            raise InvalidInput("travel_fraction must be in [0, 1] and effective_travel non-negative")
        check_partition(self.phases)
        x, y = self.shape.knots()
        object.__setattr__(self, "_stance_curve", PchipInterpolator(x * self.stance_end, y))

    @property
    def peak_load(self) -> float:
        return self.load_factor * self.body_weight

    @property
    def peak_travel(self) -> float:
        return self.travel_fraction * self.effective_travel

    @property
    def stance_end(self) -> float:
        return self.phases[-1].start_fraction

    def phase_fraction(self, t: float) -> float:
        if t < 0:
            raise InvalidInput("time must not be negative")
        return round((t % self.stride_duration) / self.stride_duration, PHASE_DECIMALS)

    def phase_at(self, t: float) -> GaitPhase:
        fraction = self.phase_fraction(t)
        for phase in self.phases:
            if phase.contains(fraction):
                return phase
        # rounding can land exactly on 1.0
        return self.phases[-1]

    def in_stance(self, t: float) -> bool:
        return self.phase_fraction(t) < self.stance_end

    def axial_load(self, t: float) -> float:
        fraction = self.phase_fraction(t)
        if fraction >= self.stance_end or self.peak_load == 0.0:
            return 0.0
        return self.peak_load * max(0.0, float(self._stance_curve(fraction)))

    def knee_travel(self, t: float) -> float:
        fraction = self.phase_fraction(t)
        if fraction < self.stance_end:
            return 0.0
        u = (fraction - self.stance_end) / (1.0 - self.stance_end)
        return self.peak_travel * 0.5 * (1.0 - math.cos(2.0 * math.pi * u))

    def to_frame(self, sample_rate: float = 100.0) -> pd.DataFrame:
        """
            One stride sampled at ``sample_rate`` Hz.
        """
        if not sample_rate > 0:
            raise InvalidInput("sample_rate must be positive")
        times = np.arange(int(round(self.stride_duration * sample_rate)) + 1) / sample_rate
        loads, travels = zip(*(sample(self, t) for t in times))

        return pd.DataFrame({"time_s": times, "axial_force_n": loads, "knee_travel_m": travels})

    def phase_table(self) -> List[dict]:
        return [dict(phase.to_record(), start_s=phase.start_fraction * self.stride_duration,
                     end_s=phase.end_fraction * self.stride_duration) for phase in self.phases]


def build_profile(body_weight, stride_duration=1.0, load_factor: float = 1.5, phases: Sequence[GaitPhase] = None,
                  shape: LoadShape = None, effective_travel=EFFECTIVE_TRAVEL, travel_fraction: float = 0.5) -> GaitProfile:
    """
        Build a gait profile.
    :param body_weight: Force, a Quantity/string or N
    :param stride_duration: Time, a Quantity/string or s
    :param load_factor: Peak axial load over body weight
    :param phases: Phase partition, the 60/40 stance/swing default when None
    :param shape: Stance load shape
    :param effective_travel: Actuator stroke, a Quantity/string or m
    :param travel_fraction: Swing apex as a fraction of the effective travel
    :return: GaitProfile
    """
    weight = quantity(body_weight, "force").m_as("N")
    stride = quantity(stride_duration, "time").m_as("s")
    travel = quantity(effective_travel, "length").m_as("m")

    return GaitProfile(weight, float(load_factor), stride, tuple(phases) if phases else default_phases(),
                       shape or LoadShape(), travel, float(travel_fraction))


def sample(profile: GaitProfile, t: float) -> Tuple[float, float]:
    """
        (axial load in N, knee travel in m) at time ``t``, periodic in the stride duration.
    """
    return profile.axial_load(t), profile.knee_travel(t)


def gait_command(profile: GaitProfile):
    """
        Desired spring force following the stance load.
    """
    return profile.axial_load

