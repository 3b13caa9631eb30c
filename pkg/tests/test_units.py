import math

import numpy as np
import pytest

from limbkit.errors import DimensionMismatch, InvalidQuantity
from limbkit.units import Q_, convert, efficiency, parse, quantity, si, speed_from_step_time


def test_pounds_force_to_newton():
    assert quantity("300 lbf", "force").m_as("N") == pytest.approx(1334.0, rel=1e-3)
    assert convert(Q_(0.0, "N"), "lbf").magnitude == 0.0


def test_pound_force_constant():
    assert quantity("1 lbf", "force").m_as("N") == pytest.approx(4.4482216, rel=1e-8)


def test_rpm_to_rev_per_second():
    assert quantity("4790 rpm", "angular_speed").m_as("revolution / second") == pytest.approx(79.83, rel=1e-4)


@pytest.mark.parametrize("unit, other", [
    ("lbf", "N"),
    ("rpm", "rad/s"),
    ("mm", "m"),
    ("kN/m", "N/m"),
    ("MPa", "psi"),
    ("mm/min", "m/s"),
    ("kg * m ** 2", "g * cm ** 2"),
    ("mm / revolution", "m / radian"),
    ("kN * s / m", "lbf * s / inch"),
])
def test_conversion_round_trip(unit, other):
    rng = np.random.default_rng(7)
    for value in rng.uniform(-1e4, 1e4, 25):
        back = convert(convert(Q_(value, unit), other), unit).magnitude
        assert back == pytest.approx(value, rel=1e-12)


def test_bare_number_takes_given_unit():
    assert quantity(300, "force").m_as("N") == 300.0
    assert quantity("315", "stiffness", "kN/m").m_as("N/m") == pytest.approx(315000.0)


def test_incompatible_conversion_raises():
    with pytest.raises(DimensionMismatch):
        convert(Q_(1.0, "mm"), "N")
    with pytest.raises(DimensionMismatch):
        quantity("5 kg", "force")


def test_sign_constraints():
    assert quantity("-20 N", "force").m_as("N") == -20.0
    with pytest.raises(InvalidQuantity):
        quantity("-1 kN/m", "stiffness")
    with pytest.raises(InvalidQuantity):
        quantity(math.inf, "length")


def test_unparsable_value():
    with pytest.raises(InvalidQuantity):
        parse("12 furlongs per fortnightly")


@pytest.mark.parametrize("value", [0.0, -0.1, 1.2])
def test_efficiency_range(value):
    with pytest.raises(InvalidQuantity):
        efficiency(value)


def test_efficiency_bounds_inclusive_at_one():
    assert efficiency(1.0) == 1.0
    assert efficiency(0.9) == 0.9


def test_si_magnitude():
    assert si(Q_(18000.0, "mm/min"), "linear_speed") == pytest.approx(0.3)


def test_speed_from_step_time():
    assert speed_from_step_time(0.1).m_as("rpm") == pytest.approx(100.0)
    with pytest.raises(InvalidQuantity):
        speed_from_step_time(0.0)
