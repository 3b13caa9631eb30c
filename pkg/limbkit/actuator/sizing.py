"""
    Ball-screw drivetrain sizing: torque and speed requirements, retraction time, motor feasibility and nut capacity.

    Sizing is static: the load is the design axial load (load factor x body weight), acceleration torque is left to
    the SEA simulation.
"""
import math
from dataclasses import dataclass

from limbkit.actuator.specs import MotorSpec, ScrewSpec
from limbkit.errors import InvalidInput
from limbkit.units import Q_, Quantity, quantity


@dataclass(frozen=True)
class SizingReport:
    required_torque: Quantity
    required_speed: Quantity
    torque_margin: float
    speed_margin: float
    retraction_time: Quantity
    load_margin: float
    feasible: bool
    required_power: Quantity
    motor_power: Quantity
    power_margin: float

    def to_record(self) -> dict:
        """
            Flat record for JSON export, the unit is part of each key.
        :return: dict
        """
        return {
            "required_torque_nm": self.required_torque.m_as("N*m"),
            "required_speed_rpm": self.required_speed.m_as("rpm"),
            "torque_margin": self.torque_margin,
            "speed_margin": self.speed_margin,
            "retraction_time_s": self.retraction_time.m_as("s"),
            "load_margin": self.load_margin,
            "required_power_w": self.required_power.m_as("W"),
            "motor_power_w": self.motor_power.m_as("W"),
            "power_margin": self.power_margin,
            "feasible": self.feasible,
        }


def nut_load_force(body_weight: Quantity, load_factor: float = 1.5) -> Quantity:
    """
        Axial design load on the nut: each leg sees load_factor x body weight while walking.
    """
    if load_factor < 0:
        raise InvalidInput("load factor must not be negative")

    return (quantity(body_weight, "force") * load_factor).to("N")


def screw_torque(load: Quantity, screw: ScrewSpec) -> Quantity:
    """
        Torque needed to drive the screw against an axial load: F * L / (2 pi eta).
    :param load: Axial force
    :param screw: Ball screw
    :return: Torque in N*m
    """
    force = quantity(load, "force").m_as("N")
    if force < 0:
        raise InvalidInput("load must not be negative")

    return Q_(force * screw.lead_m / (2.0 * math.pi * screw.efficiency), "N*m")


def screw_speed(linear_speed: Quantity, screw: ScrewSpec) -> Quantity:
    """
        Screw speed needed for a nut speed: V_L / L.
    :param linear_speed: Nut speed
    :param screw: Ball screw
    :return: Angular speed in rpm
    """
    speed = quantity(linear_speed, "linear_speed").m_as("mm/min")

    return Q_(speed / screw.lead.m_as("mm / revolution"), "rpm")


def retraction_time(effective_travel: Quantity, screw: ScrewSpec, motor: MotorSpec) -> Quantity:
    """
        Time to cover the effective travel at the motor operating speed: ELT / (L * omega_m).
    """
    travel = quantity(effective_travel, "length").m_as("m")
    if travel <= 0:
        raise InvalidInput("effective travel must be positive")

    return Q_(travel / (screw.lead_m * motor.speed_rev_s), "s")


def check_feasibility(load: Quantity, linear_speed: Quantity, travel: Quantity, screw: ScrewSpec,
                      motor: MotorSpec) -> SizingReport:
    """
        Compare the motor against the screw requirements and the nut against the load.

        Margins are capability / requirement; an infeasible design is a report with feasible=False.
    :param load: Axial design load
    :param linear_speed: Required nut speed
    :param travel: Effective linear travel
    :param screw: Ball screw
    :param motor: Servomotor
    :return: SizingReport
    """
    load = quantity(load, "force")
    if load.m_as("N") <= 0 or quantity(linear_speed, "linear_speed").m_as("m/s") <= 0:
        raise InvalidInput("load and linear speed must be positive")

    required_torque = screw_torque(load, screw)
    required_speed = screw_speed(linear_speed, screw)

    torque_margin = motor.operating_torque.m_as("N*m") / required_torque.m_as("N*m")
    speed_margin = motor.operating_speed.m_as("rpm") / required_speed.m_as("rpm")
    load_margin = screw.rated_load.m_as("N") / load.m_as("N")

    required_power = (required_torque * required_speed).to("W")
    motor_power = (motor.operating_torque * motor.operating_speed).to("W")

    return SizingReport(
        required_torque=required_torque,
        required_speed=required_speed,
        torque_margin=torque_margin,
        speed_margin=speed_margin,
        retraction_time=retraction_time(travel, screw, motor),
        load_margin=load_margin,
        feasible=torque_margin >= 1.0 and speed_margin >= 1.0 and load_margin >= 1.0,
        required_power=required_power,
        motor_power=motor_power,
        power_margin=motor_power.m_as("W") / required_power.m_as("W"),
    )
