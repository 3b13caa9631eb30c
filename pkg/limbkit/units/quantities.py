"""
    Physical quantities with units.

    A single pint registry is shared by the whole toolkit. Every quantity kind of the toolkit has a canonical SI unit
    used internally; display units such as mm, rpm and lbf are only used at the configuration and CLI boundary.
"""
import math
from dataclasses import dataclass
from typing import Dict, Union

import pint

from limbkit.errors import DimensionMismatch, InvalidQuantity

ureg = pint.UnitRegistry()
Q_ = ureg.Quantity

Quantity = pint.Quantity
UnitTag = Union[str, pint.Unit]


@dataclass(frozen=True)
class Kind:
    """
        A quantity kind: canonical unit and the sign constraint of its magnitude.
    """
    name: str
    canonical: str
    signed: bool = False


KINDS: Dict[str, Kind] = {
    "force": Kind("force", "newton", signed=True),
    "torque": Kind("torque", "newton * meter", signed=True),
    "linear_speed": Kind("linear_speed", "meter / second"),
    "angular_speed": Kind("angular_speed", "radian / second"),
    "stiffness": Kind("stiffness", "newton / meter"),
    "length": Kind("length", "meter"),
    "lead": Kind("lead", "meter / revolution"),
    "mass": Kind("mass", "kilogram"),
    "inertia": Kind("inertia", "kilogram * meter ** 2"),
    "stress": Kind("stress", "pascal"),
    "time": Kind("time", "second"),
    "frequency": Kind("frequency", "hertz"),
    "damping": Kind("damping", "newton * second / meter"),
    "density": Kind("density", "kilogram / meter ** 3"),
    "voltage": Kind("voltage", "volt"),
    "power": Kind("power", "watt"),
}


def parse(value) -> Quantity:
    """
        Parse a configuration value into a quantity.
    :param value: A pint-parsable string ("315 kN/m"), a number (dimensionless) or a Quantity
    :return: Quantity
    """
    if isinstance(value, Quantity):
        return value
    if isinstance(value, (int, float)):
        return Q_(float(value), "dimensionless")
    try:
        return Q_(value)
    except (pint.errors.UndefinedUnitError, pint.errors.DefinitionSyntaxError, ValueError, TypeError) as e:
        raise InvalidQuantity(f"cannot parse quantity {value!r}: {e}") from e


def quantity(value, kind: str, unit: UnitTag = None) -> Quantity:
    """
        Build and validate a quantity of the given kind.
    :param value: Magnitude (with ``unit``) or anything ``parse`` accepts
    :param kind: Key of ``KINDS``
    :param unit: Unit of a bare magnitude; the canonical unit when omitted
    :return: Quantity
    """
    spec = KINDS[kind]

    if isinstance(value, str):
        try:
            value = float(value)
        except ValueError:
            pass

    if isinstance(value, (int, float)) and not isinstance(value, bool):
        q = Q_(float(value), unit if unit is not None else spec.canonical)
    else:
        q = parse(value)

    if not q.check(Q_(1.0, spec.canonical).dimensionality):
        raise DimensionMismatch(str(q.dimensionality), f"{kind} ({spec.canonical})")
    if not math.isfinite(q.magnitude):
        raise InvalidQuantity(f"{kind} must be finite, got {q}")
    if not spec.signed and q.magnitude < 0:
        raise InvalidQuantity(f"{kind} must not be negative, got {q}")

    return q


def efficiency(value: float) -> float:
    """
        Validate a dimensionless efficiency.
    :param value: Efficiency
    :return: Efficiency as float in (0, 1]
    """
    value = float(value.m_as("dimensionless")) if isinstance(value, Quantity) else float(value)

    if not 0.0 < value <= 1.0:
        raise InvalidQuantity(f"efficiency must be in (0, 1], got {value}")

    return value


def convert(q: Quantity, target_unit: UnitTag) -> Quantity:
    """
        Express a quantity in another unit of the same dimension.
    :param q: Quantity
    :param target_unit: Unit name or pint Unit
    :return: Converted quantity
    """
    try:
        return q.to(target_unit)
    except pint.errors.DimensionalityError as e:
        raise DimensionMismatch(str(e.dim1), str(e.dim2)) from e


def si(q: Quantity, kind: str) -> float:
    """
        Magnitude of a quantity in the canonical unit of its kind.
    """
    return convert(q, KINDS[kind].canonical).magnitude


def speed_from_step_time(seconds_per_60_degrees: float) -> Quantity:
    """
        Servo datasheets list speed as the time needed to turn 60 degrees.
    :param seconds_per_60_degrees: Time in seconds per 60 degrees
    :return: Angular speed in rpm
    """
    if seconds_per_60_degrees <= 0:
        raise InvalidQuantity("step time must be positive")

    return convert(Q_(60.0, "degree") / Q_(seconds_per_60_degrees, "second"), "rpm")
