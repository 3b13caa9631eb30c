import json

import pytest

from limbkit.config import CONFIG_ENV, deep_merge, load_config, stiffness_values
from limbkit.errors import ConfigError


def test_defaults(config):
    assert config.source is None
    assert config.spring_stiffness == pytest.approx(315e3)
    assert config.sizing.body_weight.m_as("lbf") == pytest.approx(200.0)
    assert config.controller.sample_rate == pytest.approx(5000.0)
    assert config.dt == pytest.approx(1e-4)
    assert config.stiffness_list == pytest.approx((100e3, 315e3, 600e3))
    assert [m.name for m in config.members] == ["screw", "rail-left", "rail-right"]
    assert [c.name for c in config.load_cases] == ["heel-strike", "opposite-heel-strike", "standing"]
    assert config.sweep_sensor().is_ideal
    assert config.plant().reflected_mass == pytest.approx(221.08, rel=1e-3)


def test_deep_merge_keeps_siblings():
    merged = deep_merge({"a": {"x": 1, "y": 2}, "b": 3}, {"a": {"y": 5}})
    assert merged == {"a": {"x": 1, "y": 5}, "b": 3}


def test_file_is_merged_over_defaults(tmp_path):
    path = tmp_path / "design.json"
    path.write_text(json.dumps({"spring": {"stiffness": "600 kN/m"}, "plant": {"load_mass": "8 kg"}}))
    config = load_config(path)
    assert config.source == path
    assert config.spring_stiffness == pytest.approx(600e3)
    assert config.load_mass == pytest.approx(8.0)
    assert config.viscous_damping == pytest.approx(50.0)


def test_environment_variable(tmp_path, monkeypatch):
    path = tmp_path / "env.json"
    path.write_text(json.dumps({"seed": 42}))
    monkeypatch.setenv(CONFIG_ENV, str(path))
    assert load_config().seed == 42


def test_overrides_win(tmp_path):
    path = tmp_path / "design.json"
    path.write_text(json.dumps({"seed": 1}))
    assert load_config(path, {"seed": 2}).seed == 2


def test_missing_file_is_a_config_error(tmp_path):
    with pytest.raises(ConfigError, match="not found"):
        load_config(tmp_path / "nope.json")


def test_invalid_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{\"seed\": ")
    with pytest.raises(ConfigError, match="invalid JSON"):
        load_config(path)


@pytest.mark.parametrize("override", [
    {"spring": {"stiffness": "315 kg"}},
    {"spring": {"stiffness": "-5 kN/m"}},
    {"sizing": {"load_factor": "many"}},
    {"members": [{"name": "screw"}]},
    {"load_cases": [{"name": "jumping", "axial": "1 N"}]},
    {"socket": {"modulus_unit": "N"}},
    {"geometry": {"resting_length": "0 mm"}},
    {"gait": {"phases": [{"name": "swing", "start_fraction": 0.0, "end_fraction": 1.0}]}},
])
def test_invalid_values_are_config_errors(override):
    with pytest.raises(ConfigError):
        load_config(overrides=override)


def test_gait_phases_must_tile_the_cycle():
    phases = [{"name": "heel-strike", "start_fraction": 0.0, "end_fraction": 0.1},
              {"name": "swing", "start_fraction": 0.2, "end_fraction": 1.0}]
    with pytest.raises(ConfigError, match="gap or overlap"):
        load_config(overrides={"gait": {"phases": phases}})


def test_moment_arms_follow_the_resting_length():
    config = load_config(overrides={"geometry": {"resting_length": "700 mm"}})
    arms = {case.name: case.moment_arm for case in config.load_cases}
    assert arms["heel-strike"] == pytest.approx(0.25 * 0.4 * 0.7)
    assert arms["opposite-heel-strike"] == pytest.approx(0.48 * 0.4 * 0.7)
    assert config.geometry.extended_length == pytest.approx(0.808)


def test_stiffness_values():
    assert stiffness_values(["100", "315 kN/m", "0.6 MN/m"]) == pytest.approx((100e3, 315e3, 600e3))
