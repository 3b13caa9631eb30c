import math

import numpy as np
import pytest

from limbkit.errors import InvalidInput
from limbkit.sea import ForceController, analytic_bandwidth, closed_loop_impedance, spring_window


def test_default_guidelines_admit_the_chosen_spring(plant, controller):
    window = spring_window(plant, controller, 40.0, 400e3, 50.0)

    assert window.feasible
    assert window.contains(315e3)
    assert 100e3 < window.lower < 315e3
    assert 315e3 < window.upper < 600e3


def test_window_bounds_meet_guidelines(plant, controller):
    window = spring_window(plant, controller, 40.0, 400e3, 50.0)
    assert analytic_bandwidth(plant.with_stiffness(window.lower), controller) == pytest.approx(40.0, rel=1e-4)
    omega = np.array([2 * math.pi * 50.0])
    assert closed_loop_impedance(plant.with_stiffness(window.upper), controller, omega)[0] == \
        pytest.approx(400e3, rel=1e-4)


def test_unreachable_bandwidth(plant, controller):
    window = spring_window(plant, controller, 500.0, 400e3, 50.0, k_range=(1e4, 1e6))
    assert window.lower is None
    assert not window.feasible
    assert not window.contains(315e3)


def test_record(plant):
    record = spring_window(plant, ForceController(), 40.0, 400e3, 50.0).to_record()
    assert record["feasible"] is True
    assert set(record) == {"lower_n_per_m", "upper_n_per_m", "feasible", "target_bandwidth_hz",
                           "max_impedance_n_per_m", "impedance_frequency_hz"}


def test_invalid_guidelines(plant, controller):
    with pytest.raises(InvalidInput):
        spring_window(plant, controller, 0.0, 400e3, 50.0)
    with pytest.raises(InvalidInput):
        spring_window(plant, controller, 40.0, 400e3, 50.0, k_range=(1e6, 1e4))
