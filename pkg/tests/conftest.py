import pytest

from limbkit.actuator import MotorSpec, ScrewSpec
from limbkit.config import load_config
from limbkit.sea import ForceController, SeaPlant, SensorModel


@pytest.fixture(autouse=True)
def no_config_env(monkeypatch):
    monkeypatch.delenv("LIMBKIT_CONFIG", raising=False)


@pytest.fixture
def config():
    return load_config()


@pytest.fixture
def screw():
    return ScrewSpec(lead="5 mm / revolution", nut_diameter="24 mm", screw_diameter="24 mm", efficiency=0.9,
                     rated_load="350 lbf")


@pytest.fixture
def motor():
    return MotorSpec(operating_speed="4790 rpm", operating_torque="1.69 N*m", supply_voltage="50 V", mass="3.3 kg",
                     rotor_inertia="1.4e-4 kg*m**2")


@pytest.fixture
def plant(motor, screw):
    return SeaPlant.from_specs(motor, screw, "315 kN/m", "50 N*s/m", "4 kg")


@pytest.fixture
def controller():
    return ForceController()


@pytest.fixture
def ideal_sensor():
    return SensorModel.ideal()
