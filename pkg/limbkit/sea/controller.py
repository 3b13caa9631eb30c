"""
    Force controller of the SEA.

    The motor command is the measured spring force plus a PID correction on the force error, evaluated at the
    controller sample rate and held in between. With zero gains the command equals the spring reaction and the
    carriage holds its position.
"""
import math
from dataclasses import dataclass
from typing import Optional

from limbkit.errors import InvalidQuantity


@dataclass(frozen=True)
class ForceController:
    kp: float = 8.0                         # dimensionless
    ki: float = 95.0                        # 1/s
    kd: float = 0.12                        # s
    sample_rate: float = 5000.0             # Hz
    derivative_filter_hz: Optional[float] = 200.0

    def __post_init__(self):
        if self.kp < 0 or self.ki < 0 or self.kd < 0:
            raise InvalidQuantity("controller gains must not be negative")
        if not self.sample_rate > 0:
            raise InvalidQuantity("sample_rate must be positive")
        if self.derivative_filter_hz is not None and not self.derivative_filter_hz > 0:
            raise InvalidQuantity("derivative_filter_hz must be positive")

    @classmethod
    def disabled(cls, sample_rate: float = 5000.0) -> "ForceController":
        return cls(kp=0.0, ki=0.0, kd=0.0, sample_rate=sample_rate)

    @property
    def sample_period(self) -> float:
        return 1.0 / self.sample_rate

    @property
    def filter_time_constant(self) -> float:
        if self.derivative_filter_hz is None:
            return 0.0
        return 1.0 / (2.0 * math.pi * self.derivative_filter_hz)


class ForceLoop:
    """
        Run-time state of a ForceController: integrator, filtered derivative and the held command.
    """
    controller: ForceController
    force_limit: float
    command: float                          # Held motor force command, saturated
    raw_command: float                      # Command before saturation

    def __init__(self, controller: ForceController, force_limit: float):
        self.controller = controller
        self.force_limit = force_limit
        self.reset()

    def reset(self):
        self.integral = 0.0
        self.derivative = 0.0
        self.previous_error = None
        self.samples = 0
        self.start = None                   # Time of the first evaluation; the sample grid is anchored here
        self.command = 0.0
        self.raw_command = 0.0

    def due(self, time: float) -> bool:
        if self.start is None:
            return True
        return time >= self.start + self.samples * self.controller.sample_period - 1e-12

    def update(self, time: float, desired: float, measured: float) -> float:
        """
            Evaluate the controller if a sample is due at ``time``, otherwise hold the last command.
        :param time: Simulated time in s
        :param desired: Desired force in N
        :param measured: Measured spring force in N
        :return: Saturated motor force command in N
        """
        if not self.due(time):
            return self.command

        ctrl = self.controller
        period = ctrl.sample_period
        if self.start is None:
            self.start = time
        self.samples += 1

        error = desired - measured
        if self.previous_error is not None:
            tf = ctrl.filter_time_constant
            self.derivative = (tf * self.derivative + ctrl.kd * (error - self.previous_error)) / (tf + period)
        self.previous_error = error

        integral = self.integral + error * period
        raw = measured + ctrl.kp * error + ctrl.ki * integral + self.derivative

        # integrate only while the command is inside the limit or the error pulls it back
        if abs(raw) <= self.force_limit or raw * error < 0:
            self.integral = integral
        else:
            raw = measured + ctrl.kp * error + ctrl.ki * self.integral + self.derivative

        self.raw_command = raw
        self.command = max(-self.force_limit, min(self.force_limit, raw))

        return self.command

    @property
    def saturated(self) -> bool:
        return abs(self.raw_command) > self.force_limit
