"""
    Force bandwidth and output impedance of the force-controlled SEA, measured by sinusoidal sweeps of the
    simulation and computed from the linearized closed loop.

    Linearized loop (locked load, no saturation, ideal sensor), with C(s) = kp + ki/s + kd s / (tf s + 1):

        force tracking   T(s) = k C / (m s^2 + b s + k C)
        output impedance Z(s) = k m s^2 / (m s^2 + b s + k C)
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np
import pandas as pd
from scipy.optimize import brentq
from scipy.signal import freqs

from limbkit.errors import InvalidInput
from limbkit.sea.controller import ForceController
from limbkit.sea.plant import LoadBoundary, SeaPlant
from limbkit.sea.sensor import SensorModel
from limbkit.sea.simulation import DivergenceBound, simulate, sine_command, sine_motion
from limbkit.utils.reporter import get_reporter

HALF_POWER = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class SweepSettings:
    min_frequency_hz: float = 1.0
    max_frequency_hz: float = 200.0
    points: int = 16
    settle_time: float = 0.5                # s, discarded before fitting
    periods: int = 3                        # fitted periods per point
    dt: float = 1e-4                        # s
    seed: int = 0
    bound: DivergenceBound = field(default_factory=DivergenceBound)

    def __post_init__(self):
        if not 0 < self.min_frequency_hz < self.max_frequency_hz:
            raise InvalidInput("sweep needs 0 < min_frequency_hz < max_frequency_hz")
        if self.points < 2 or self.periods < 1 or self.settle_time < 0:
            raise InvalidInput("sweep needs at least 2 points, 1 period and a non-negative settle time")

    @property
    def frequencies(self) -> np.ndarray:
        """
            Logarithmic sweep in rad/s.
        """
        hz = np.logspace(math.log10(self.min_frequency_hz), math.log10(self.max_frequency_hz), self.points)

        return 2.0 * math.pi * hz


@dataclass(frozen=True)
class FrequencyResponse:
    """
        Magnitude per frequency. For force tracking the magnitude is achieved over commanded force, for impedance it
        is force per unit load displacement in N/m.
    """
    frequencies: np.ndarray                 # rad/s, strictly increasing
    magnitude: np.ndarray
    bandwidth_hz: Optional[float] = None

    def __post_init__(self):
        if len(self.frequencies) != len(self.magnitude):
            raise InvalidInput("frequencies and magnitude differ in length")
        if np.any(np.diff(self.frequencies) <= 0):
            raise InvalidInput("frequencies must be strictly increasing")

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"freq_rad_s": self.frequencies, "magnitude": self.magnitude})


def fit_amplitude(time: np.ndarray, signal: np.ndarray, omega: float) -> float:
    """
        Amplitude of the omega component of a signal, by least squares on [sin, cos, 1].
    """
    basis = np.column_stack([np.sin(omega * time), np.cos(omega * time), np.ones_like(time)])
    coefficients, *_ = np.linalg.lstsq(basis, signal, rcond=None)

    return float(math.hypot(coefficients[0], coefficients[1]))


def _fit_window(settings: SweepSettings, omega: float) -> Tuple[float, float]:
    period = 2.0 * math.pi / omega

    return settings.settle_time, settings.settle_time + settings.periods * period


def measure_tracking(plant: SeaPlant, ctrl: ForceController, sensor: Optional[SensorModel], amplitude: float,
                     omega: float, settings: SweepSettings = SweepSettings()) -> float:
    """
        Ratio of achieved to commanded force amplitude for a sinusoidal command against a locked load.
    :param omega: Command frequency in rad/s
    :return: Magnitude ratio
    """
    start, end = _fit_window(settings, omega)
    trajectory = simulate(plant, ctrl, sensor, sine_command(amplitude, omega), LoadBoundary.LOCKED,
                          dt=settings.dt, duration=end, seed=settings.seed, bound=settings.bound)
    window = trajectory.time >= start

    return fit_amplitude(trajectory.time[window], trajectory.true_force[window], omega) / amplitude


def measure_impedance(plant: SeaPlant, ctrl: Optional[ForceController], sensor: Optional[SensorModel],
                      motion_amplitude: float, omega: float, settings: SweepSettings = SweepSettings()) -> float:
    """
        Spring force amplitude per unit load displacement under a zero force command and sinusoidal load motion.
    :param omega: Motion frequency in rad/s
    :return: Impedance magnitude in N/m
    """
    start, end = _fit_window(settings, omega)
    trajectory = simulate(plant, ctrl, sensor, 0.0, LoadBoundary.PRESCRIBED, dt=settings.dt, duration=end,
                          seed=settings.seed, load_motion=sine_motion(motion_amplitude, omega), bound=settings.bound)
    window = trajectory.time >= start

    return fit_amplitude(trajectory.time[window], trajectory.true_force[window], omega) / motion_amplitude


def half_power_crossing(frequencies: np.ndarray, magnitude: np.ndarray) -> Optional[float]:
    """
        First frequency at which the magnitude falls below 1/sqrt(2), interpolated linearly in log frequency.
    :return: Crossing in the unit of ``frequencies``, None when the sweep never crosses
    """
    for i in range(1, len(magnitude)):
        if magnitude[i - 1] >= HALF_POWER > magnitude[i]:
            ratio = (magnitude[i - 1] - HALF_POWER) / (magnitude[i - 1] - magnitude[i])
            low, high = math.log(frequencies[i - 1]), math.log(frequencies[i])
            return math.exp(low + ratio * (high - low))

    return None


def force_bandwidth(plant: SeaPlant, ctrl: ForceController, sensor: Optional[SensorModel], amplitude: float,
                    settings: SweepSettings = SweepSettings()) -> FrequencyResponse:
    """
        Sweep sinusoidal force commands against a locked load.
    :param plant: Plant
    :param ctrl: Force controller
    :param sensor: Deflection sensor, ideal when None
    :param amplitude: Command amplitude in N, at most the force limit
    :param settings: Sweep settings
    :return: FrequencyResponse with the -3 dB bandwidth in Hz
    """
    if not 0 < amplitude <= plant.force_limit:
        raise InvalidInput(f"amplitude {amplitude} N must lie in (0, {plant.force_limit:.1f}] N")

    reporter = get_reporter()
    frequencies = settings.frequencies
    magnitude = np.empty_like(frequencies)

    for i, omega in enumerate(frequencies):
        magnitude[i] = measure_tracking(plant, ctrl, sensor, amplitude, omega, settings)
        reporter.log(logging.INFO, f"k_s={plant.spring_stiffness:.0f} N/m, {omega / (2 * math.pi):.2f} Hz: "
                                   f"|T|={magnitude[i]:.4f}")

    crossing = half_power_crossing(frequencies, magnitude)
    if crossing is None:
        reporter.log(logging.WARNING, f"no -3 dB crossing between {settings.min_frequency_hz} and "
                                      f"{settings.max_frequency_hz} Hz")

    return FrequencyResponse(frequencies, magnitude, crossing / (2.0 * math.pi) if crossing is not None else None)


def output_impedance(plant: SeaPlant, ctrl: Optional[ForceController], sensor: Optional[SensorModel],
                     motion_amplitude: float, settings: SweepSettings = SweepSettings()) -> FrequencyResponse:
    """
        Sweep prescribed sinusoidal load motion with a zero force command.
    :param plant: Plant
    :param ctrl: Force controller, a disabled controller gives the bare spring
    :param sensor: Deflection sensor, ideal when None
    :param motion_amplitude: Load motion amplitude in m
    :param settings: Sweep settings
    :return: FrequencyResponse of impedance magnitudes in N/m
    """
    if not motion_amplitude > 0:
        raise InvalidInput("motion_amplitude must be positive")

    reporter = get_reporter()
    frequencies = settings.frequencies
    magnitude = np.empty_like(frequencies)

    for i, omega in enumerate(frequencies):
        magnitude[i] = measure_impedance(plant, ctrl, sensor, motion_amplitude, omega, settings)
        reporter.log(logging.INFO, f"k_s={plant.spring_stiffness:.0f} N/m, {omega / (2 * math.pi):.2f} Hz: "
                                   f"|Z|={magnitude[i]:.1f} N/m")

    return FrequencyResponse(frequencies, magnitude)


def _controller_polynomials(ctrl: ForceController) -> Tuple[np.ndarray, np.ndarray]:
    tf = ctrl.filter_time_constant
    numerator = np.array([ctrl.kp * tf + ctrl.kd, ctrl.kp + ctrl.ki * tf, ctrl.ki])
    denominator = np.array([tf, 1.0, 0.0])

    return numerator, denominator


def _characteristic(plant: SeaPlant, ctrl: ForceController) -> np.ndarray:
    cn, cd = _controller_polynomials(ctrl)
    mechanics = np.array([plant.reflected_mass, plant.viscous_damping, 0.0])

    return np.polyadd(np.polymul(mechanics, cd), plant.spring_stiffness * cn)


def closed_loop_force_response(plant: SeaPlant, ctrl: ForceController, frequencies: np.ndarray) -> np.ndarray:
    """
        |T(jw)| of the linearized loop.
    :param frequencies: rad/s
    """
    cn, _ = _controller_polynomials(ctrl)
    _, response = freqs(plant.spring_stiffness * cn, _characteristic(plant, ctrl), worN=np.asarray(frequencies))

    return np.abs(response)


def closed_loop_impedance(plant: SeaPlant, ctrl: ForceController, frequencies: np.ndarray) -> np.ndarray:
    """
        |Z(jw)| of the linearized loop in N/m.
    :param frequencies: rad/s
    """
    _, cd = _controller_polynomials(ctrl)
    numerator = plant.spring_stiffness * plant.reflected_mass * np.polymul([1.0, 0.0, 0.0], cd)
    _, response = freqs(numerator, _characteristic(plant, ctrl), worN=np.asarray(frequencies))

    return np.abs(response)


def closed_loop_poles(plant: SeaPlant, ctrl: ForceController) -> np.ndarray:
    return np.roots(np.trim_zeros(_characteristic(plant, ctrl), "f"))


def is_stable(plant: SeaPlant, ctrl: ForceController) -> bool:
    return bool(np.all(closed_loop_poles(plant, ctrl).real < 0))


def analytic_bandwidth(plant: SeaPlant, ctrl: ForceController, min_frequency: float = 0.01,
                       max_frequency: float = 1e5) -> Optional[float]:
    """
        -3 dB point of the linearized force loop.
    :param min_frequency: Lower end of the search in rad/s
    :param max_frequency: Upper end of the search in rad/s
    :return: Bandwidth in Hz, None when the response never crosses 1/sqrt(2)
    """
    if not is_stable(plant, ctrl):
        get_reporter().log(logging.WARNING, f"linearized loop is unstable at k_s={plant.spring_stiffness:.0f} N/m")

    grid = np.logspace(math.log10(min_frequency), math.log10(max_frequency), 2000)
    magnitude = closed_loop_force_response(plant, ctrl, grid)
    below = np.nonzero((magnitude[:-1] >= HALF_POWER) & (magnitude[1:] < HALF_POWER))[0]
    if len(below) == 0:
        return None

    i = int(below[0])
    omega = brentq(lambda w: closed_loop_force_response(plant, ctrl, np.array([w]))[0] - HALF_POWER,
                   grid[i], grid[i + 1])

    return omega / (2.0 * math.pi)
