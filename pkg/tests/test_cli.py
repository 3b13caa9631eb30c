import json

import numpy as np
import pandas as pd
import pytest

from limbkit.cli import main
from limbkit.socket_map import read_raster


def run(tmp_path, *argv):
    return main([*argv, "--out", str(tmp_path)])


def test_size(tmp_path, capsys):
    assert run(tmp_path, "size") == 0
    record = json.loads((tmp_path / "sizing.json").read_text())
    assert record["feasible"] is True
    assert record["design_load_n"] == pytest.approx(1334.5, rel=1e-3)
    assert record["geometry"]["extended_length_m"] == pytest.approx(0.773)
    assert record["motor_weight_fraction"] == pytest.approx(3.3 / 9.0)
    out = capsys.readouterr().out
    assert "Feasible         : yes" in out
    assert "665 mm resting, 773 mm extended" in out


def test_size_with_a_weak_nut(tmp_path):
    assert run(tmp_path, "size", "--rated-load", "100 lbf") == 2


def test_missing_config_file(tmp_path):
    assert run(tmp_path, "size", "--config", str(tmp_path / "missing.json")) == 1


def test_size_rejects_broken_gait_phases(tmp_path):
    config = tmp_path / "swing_only.json"
    config.write_text(json.dumps({"gait": {"phases": [{"name": "swing", "start_fraction": 0.0, "end_fraction": 1.0}]}}))
    assert run(tmp_path / "out", "size", "--config", str(config)) == 1
    assert not (tmp_path / "out" / "sizing.json").exists()


def test_simulate_step(tmp_path):
    assert run(tmp_path, "simulate", "--step", "300 N", "--duration", "2 s") == 0
    summary = json.loads((tmp_path / "simulation_summary.json").read_text())
    assert summary["samples"] == 20000
    assert summary["steady_state_error_pct"] < 1.0

    frame = pd.read_csv(tmp_path / "trajectory.csv", float_precision="round_trip")
    assert len(frame) == 20000
    assert frame["commanded_force_n"].abs().max() <= summary["force_limit_n"]


def test_simulate_gait(tmp_path):
    assert run(tmp_path, "simulate", "--gait", "--duration", "1 s") == 0
    frame = pd.read_csv(tmp_path / "trajectory.csv", float_precision="round_trip")
    assert frame["desired_force_n"].max() == pytest.approx(1334.5, rel=1e-3)


def test_simulate_command_file(tmp_path):
    table = tmp_path / "command.csv"
    table.write_text("time_s,desired_force_n\n0,0\n0.1,200\n")
    assert main(["simulate", "--command-file", str(table), "--duration", "0.2 s", "--out", str(tmp_path / "o")]) == 0
    frame = pd.read_csv(tmp_path / "o" / "trajectory.csv", float_precision="round_trip")
    assert frame["desired_force_n"].iloc[-1] == pytest.approx(200.0)


def test_simulate_zero_duration(tmp_path):
    assert run(tmp_path, "simulate", "--duration", "0 s") == 0
    assert json.loads((tmp_path / "simulation_summary.json").read_text())["samples"] == 0
    assert pd.read_csv(tmp_path / "trajectory.csv", float_precision="round_trip").empty


def test_simulate_is_deterministic(tmp_path):
    first, second = tmp_path / "a", tmp_path / "b"
    assert main(["simulate", "--duration", "0.2 s", "--seed", "7", "--out", str(first)]) == 0
    assert main(["simulate", "--duration", "0.2 s", "--seed", "7", "--out", str(second)]) == 0
    assert (first / "trajectory.csv").read_bytes() == (second / "trajectory.csv").read_bytes()


def test_simulate_divergence_exits_3(tmp_path):
    config = tmp_path / "tight.json"
    config.write_text(json.dumps({"simulation": {"max_position": "0.1 mm"}}))
    assert run(tmp_path, "simulate", "--config", str(config), "--step", "1000 N", "--duration", "0.5 s") == 3


def test_bandwidth_rises_with_stiffness(tmp_path):
    assert run(tmp_path, "bandwidth", "--ks", "100", "315", "600") == 0
    table = pd.read_csv(tmp_path / "bandwidth_table.csv", float_precision="round_trip")
    assert table["bandwidth_hz"].is_monotonic_increasing
    assert table["bandwidth_hz"].notna().all()
    assert (tmp_path / "frequency_response_315kN_m.csv").exists()


def test_bandwidth_single_stiffness(tmp_path):
    assert run(tmp_path, "bandwidth", "--ks", "315 kN/m") == 0
    assert len(pd.read_csv(tmp_path / "bandwidth_table.csv", float_precision="round_trip")) == 1
    assert sorted(p.name for p in tmp_path.glob("frequency_response_*.csv")) == ["frequency_response_315kN_m.csv"]


def test_bandwidth_needs_a_stiffness(tmp_path):
    with pytest.raises(SystemExit) as info:
        run(tmp_path, "bandwidth", "--ks")
    assert info.value.code == 1


def test_gait(tmp_path):
    assert run(tmp_path, "gait") == 0
    frame = pd.read_csv(tmp_path / "gait_profile.csv", float_precision="round_trip")
    assert frame["axial_force_n"].max() == pytest.approx(1334.5, rel=1e-3)
    phases = json.loads((tmp_path / "gait_phases.json").read_text())["phases"]
    assert [p["name"] for p in phases][-1] == "swing"


def test_socket_map(tmp_path):
    raster = tmp_path / "depth.txt"
    raster.write_text("3 2 1 -1\n0 20 50\n-1 10 -1\n")
    assert main(["socket-map", str(raster), "--bands", "2", "--out", str(tmp_path / "o")]) == 0

    modulus = read_raster(tmp_path / "o" / "modulus.txt").depth
    assert modulus[0] == pytest.approx([1.0882, 1.8522, 2.9982], abs=1e-12)
    assert modulus[1, 0] == -1.0
    bands = read_raster(tmp_path / "o" / "bands.txt").depth
    assert np.array_equal(bands, [[0, 0, 1], [-1, 0, -1]])
    assert json.loads((tmp_path / "o" / "socket_summary.json").read_text())["monotonic"] is True


def test_socket_map_uniform_grid(tmp_path):
    raster = tmp_path / "flat.txt"
    raster.write_text("2 2 1 -1\n0 0\n0 0\n")
    assert main(["socket-map", str(raster), "--out", str(tmp_path / "o")]) == 0
    assert np.all(read_raster(tmp_path / "o" / "modulus.txt").depth == 1.0882)


def test_socket_map_malformed(tmp_path):
    raster = tmp_path / "depth.txt"
    raster.write_text("3 2 1 -1\n0 20 50\n")
    assert main(["socket-map", str(raster), "--out", str(tmp_path / "o")]) == 1


def test_stress(tmp_path):
    assert run(tmp_path, "stress") == 0
    assert len(pd.read_csv(tmp_path / "stress_reports.csv", float_precision="round_trip")) == 9
    summary = json.loads((tmp_path / "stress_summary.json").read_text())
    assert summary["all_safe"] is True
    assert summary["geometry"]["resting_length_m"] == pytest.approx(0.665)


def test_stress_unsafe(tmp_path):
    assert run(tmp_path, "stress", "--yield-strength", "1 Pa") == 2


def test_stress_case_filter(tmp_path):
    assert run(tmp_path, "stress", "--case", "standing", "--case", "heel-strike") == 0
    cases = set(pd.read_csv(tmp_path / "stress_reports.csv", float_precision="round_trip")["case"])
    assert cases == {"standing", "heel-strike"}


def test_spring_window(tmp_path):
    assert run(tmp_path, "spring-window") == 0
    record = json.loads((tmp_path / "spring_window.json").read_text())
    assert record["configured_inside"] is True
    assert run(tmp_path, "spring-window", "--bandwidth", "5000 Hz") == 2


def test_unknown_flag_exits_1(tmp_path):
    with pytest.raises(SystemExit) as info:
        run(tmp_path, "size", "--bogus")
    assert info.value.code == 1


@pytest.mark.parametrize("command", ["size", "simulate", "bandwidth", "gait", "socket-map", "stress", "spring-window"])
def test_help(command, capsys):
    with pytest.raises(SystemExit) as info:
        main([command, "--help"])
    assert info.value.code == 0
    assert command in capsys.readouterr().out
