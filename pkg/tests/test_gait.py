import numpy as np
import pytest

from limbkit.errors import InvalidInput
from limbkit.gait import GaitPhase, LoadShape, build_profile, gait_command, sample
from limbkit.gait.profile import PHASE_NAMES, check_partition, default_phases

BODY_WEIGHT_N = 889.6443               # 200 lbf


@pytest.fixture
def profile():
    return build_profile("200 lbf", "1 s", load_factor=1.5)


def test_peak_axial_load(profile):
    assert profile.peak_load == pytest.approx(1.5 * BODY_WEIGHT_N, rel=1e-6)
    assert profile.peak_load == pytest.approx(1334.0, rel=0.005)

    dense = np.array([profile.axial_load(t) for t in np.linspace(0.0, 1.0, 10001)])
    assert dense.max() == pytest.approx(profile.peak_load, rel=1e-3)
    assert dense.max() <= profile.peak_load * (1 + 1e-9)
    assert dense.min() >= 0.0


def test_stance_has_two_humps(profile):
    first = profile.axial_load(0.15)
    trough = profile.axial_load(0.30)
    second = profile.axial_load(0.45)
    assert trough < first and trough < second
    assert trough == pytest.approx(0.7 * profile.peak_load, rel=1e-6)


def test_no_load_in_swing(profile):
    for t in (0.6, 0.7, 0.85, 0.99):
        assert profile.axial_load(t) == 0.0
        assert not profile.in_stance(t)
    assert profile.in_stance(0.1)
    assert profile.axial_load(0.0) == 0.0


def test_periodic_in_stride(profile):
    assert sample(profile, 0.3) == sample(profile, 1.3)
    assert sample(profile, 0.75) == sample(profile, 5.75)


def test_zero_load_factor():
    quiet = build_profile("200 lbf", load_factor=0.0)
    assert all(quiet.axial_load(t) == 0.0 for t in np.linspace(0.0, 1.0, 101))


def test_phase_partition(profile):
    names = [profile.phase_at(t).name for t in (0.0, 0.1, 0.3, 0.52, 0.57, 0.8, 1.0)]
    assert names == ["heel-strike", "foot-flat", "midstance", "opposite-heel-strike", "toe-off", "swing",
                     "heel-strike"]
    assert profile.phase_at(0.08).name == "foot-flat"
    assert tuple(phase.name for phase in profile.phases) == PHASE_NAMES


def test_knee_travel_peaks_in_swing(profile):
    times = np.linspace(0.0, 1.0, 1001)
    travel = np.array([profile.knee_travel(t) for t in times])
    assert travel.max() <= 0.108
    assert travel.max() == pytest.approx(0.054, rel=1e-6)
    assert 0.6 <= times[np.argmax(travel)] < 1.0
    assert np.all(travel[times < 0.6] == 0.0)


def test_to_frame(profile):
    frame = profile.to_frame(sample_rate=100.0)
    assert list(frame.columns) == ["time_s", "axial_force_n", "knee_travel_m"]
    assert len(frame) == 101
    assert frame["axial_force_n"].max() == pytest.approx(profile.peak_load, rel=1e-3)
    with pytest.raises(InvalidInput):
        profile.to_frame(sample_rate=0.0)


def test_phase_table_in_seconds():
    table = build_profile("700 N", "1.2 s").phase_table()
    assert table[-1]["name"] == "swing"
    assert table[-1]["start_s"] == pytest.approx(0.72)
    assert table[-1]["end_s"] == pytest.approx(1.2)


def test_gait_command_follows_load(profile):
    command = gait_command(profile)
    assert command(0.15) == profile.axial_load(0.15)


def test_invalid_profiles():
    with pytest.raises(InvalidInput):
        build_profile("0 N")
    with pytest.raises(InvalidInput):
        build_profile("200 lbf", load_factor=-1.0)
    with pytest.raises(InvalidInput):
        build_profile("200 lbf", travel_fraction=1.5)
    with pytest.raises(InvalidInput):
        build_profile("200 lbf").axial_load(-0.1)
    with pytest.raises(InvalidInput):
        GaitPhase("running", 0.0, 1.0)
    with pytest.raises(InvalidInput):
        LoadShape(trough=(0.5, 1.2)).knots()


def test_partition_must_tile_the_cycle():
    phases = list(default_phases())
    check_partition(phases)
    phases[2] = GaitPhase("midstance", 0.25, 0.50)
    with pytest.raises(InvalidInput):
        check_partition(phases)
    with pytest.raises(InvalidInput):
        check_partition(list(reversed(default_phases())))


def test_stance_carries_load(profile):
    times = np.linspace(0.0, 0.6, 601)
    loads = np.array([profile.axial_load(t) for t in times])
    assert loads.sum() * (times[1] - times[0]) > 0.0
    load, travel = sample(profile, 0.8)
    assert load == 0.0
    assert 0.0 < travel <= 0.108
