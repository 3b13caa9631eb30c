import math

import pytest

from limbkit.errors import ConfigError, InvalidInput
from limbkit.stress import (FrameGeometry, LoadCase, MemberGeometry, Rectangle, SolidCircle, evaluate_case,
                            geometry_from_record, load_case_from_record, member_from_record, run_all_cases, to_frame,
                            von_mises, worst_case)
from limbkit.stress.check import REPORT_COLUMNS
from limbkit.utils.runners import process_stress_results, run_stress_study


def test_von_mises_examples():
    assert von_mises(100e6, 50e6, 20e6) == pytest.approx(153.948e6, rel=1e-5)
    assert von_mises(0.0, 0.0, 10.0) == pytest.approx(10.0 * math.sqrt(3.0))
    assert von_mises(5.0, 0.0, 0.0) == 5.0


def test_sections():
    circle = SolidCircle(0.024)
    assert circle.area == pytest.approx(math.pi * 0.012 ** 2)
    assert circle.second_moment == pytest.approx(math.pi * 0.024 ** 4 / 64)
    rail = Rectangle(0.015, 0.0125)
    assert rail.second_moment == pytest.approx(0.015 * 0.0125 ** 3 / 12)
    assert rail.extreme_fiber == 0.00625
    with pytest.raises(InvalidInput):
        SolidCircle(0.0)


def test_standing_is_pure_compression(config):
    screw = config.members[0]
    standing = next(case for case in config.load_cases if case.name == "standing")
    report = evaluate_case(screw, standing)

    expected = 889.6443 / (math.pi * 0.012 ** 2)
    assert report.axial_stress == pytest.approx(expected, rel=1e-6)
    assert report.von_mises == pytest.approx(report.axial_stress, rel=1e-9)
    assert report.bending_stress == 0.0


def test_rails_see_more_than_the_screw_when_bent(config):
    members = {member.name: member for member in config.members}
    for case in config.load_cases:
        if case.moment == 0.0:
            continue
        screw = evaluate_case(members["screw"], case)
        rail = evaluate_case(members["rail-left"], case)
        assert rail.von_mises >= screw.von_mises


def test_heel_strike_values(config):
    reports = {(r.member, r.case): r for r in run_all_cases(config.members, config.load_cases)}
    assert reports[("screw", "heel-strike")].von_mises == pytest.approx(19.34e6, rel=0.01)
    assert reports[("rail-left", "heel-strike")].von_mises == pytest.approx(31.99e6, rel=0.01)
    assert reports[("screw", "opposite-heel-strike")].von_mises == pytest.approx(28.08e6, rel=0.01)
    assert reports[("rail-left", "opposite-heel-strike")].von_mises == pytest.approx(47.19e6, rel=0.01)


def test_default_geometry(config):
    geometry = config.geometry
    assert geometry.resting_length == pytest.approx(0.665)
    assert geometry.effective_travel == pytest.approx(0.108)
    assert geometry.extended_length == pytest.approx(0.773)
    assert geometry.overall_weight == 9.0
    assert geometry.weight_fraction(config.motor.mass.m_as("kg")) == pytest.approx(3.3 / 9.0)

    assert geometry.foot_length == pytest.approx(0.266)
    arms = {case.name: case.moment_arm for case in config.load_cases}
    assert arms == pytest.approx({"heel-strike": 0.0665, "opposite-heel-strike": 0.12768, "standing": 0.0})


def test_geometry_validation():
    with pytest.raises(InvalidInput):
        FrameGeometry(0.0, 0.108, 9.0)
    with pytest.raises(InvalidInput):
        FrameGeometry(0.665, 0.108, 9.0, foot_length_ratio=1.5)
    with pytest.raises(ConfigError):
        geometry_from_record({"overall_weight": "9 kg"}, 0.108)


def test_every_member_under_every_case(config):
    reports = run_all_cases(config.members[:2], config.load_cases)
    assert len(reports) == 6
    assert [r.member for r in reports] == ["screw"] * 3 + ["rail-left"] * 3
    assert all(r.safe for r in reports)
    with pytest.raises(InvalidInput):
        run_all_cases([], config.load_cases)


def test_zero_load_is_safe(config):
    idle = LoadCase("standing", 0.0, 0.0, 0.0)
    report = evaluate_case(config.members[0], idle)
    assert report.von_mises == 0.0
    assert report.safe
    assert report.safety_factor == math.inf


def test_stress_scales_with_load(config):
    member = config.members[1]
    case = config.load_cases[0]
    assert evaluate_case(member, case.scaled(2.0)).von_mises == \
        pytest.approx(2.0 * evaluate_case(member, case).von_mises, rel=1e-12)
    assert evaluate_case(member, case.scaled(-1.0)).von_mises == \
        pytest.approx(evaluate_case(member, case).von_mises, rel=1e-12)


def test_utilization_falls_with_yield_strength(config):
    weak = run_stress_study(config, ["heel-strike"], yield_strength="100 MPa")
    strong = run_stress_study(config, ["heel-strike"], yield_strength="400 MPa")
    for a, b in zip(weak, strong):
        assert a.utilization > b.utilization
        assert a.von_mises == b.von_mises


def test_utilization_is_unit_invariant(config):
    in_mpa = run_stress_study(config, yield_strength="215 MPa")
    in_psi = run_stress_study(config, yield_strength=f"{215e6 / 6894.757293168} psi")
    for a, b in zip(in_mpa, in_psi):
        assert a.utilization == pytest.approx(b.utilization, rel=1e-9)


def test_case_filter(config):
    reports = run_stress_study(config, ["standing"])
    assert {r.case for r in reports} == {"standing"}
    assert len(reports) == len(config.members)
    with pytest.raises(InvalidInput):
        run_stress_study(config, ["jumping"])


def test_worst_case_and_tables(config):
    reports = run_stress_study(config)
    worst = worst_case(reports)
    assert worst.utilization == max(r.utilization for r in reports)
    assert worst.member.startswith("rail")
    assert worst_case([]) is None

    frame = to_frame(reports)
    assert list(frame.columns) == REPORT_COLUMNS
    assert len(frame) == 9

    summary = process_stress_results(reports)
    assert list(summary.index)[0].startswith("rail")
    assert summary.loc["screw", "count"] == 3
    assert summary.loc["screw", "unsafe"] == 0

    failing = process_stress_results(run_stress_study(config, yield_strength="1 MPa"))
    assert (failing["unsafe"] == 3).all()


def test_records(config):
    member = member_from_record({"name": "pin", "cross_section": {"type": "solid-circle", "diameter": "8 mm"},
                                 "length": "40 mm", "material": "al6061"}, config.catalog)
    assert isinstance(member, MemberGeometry)
    assert member.cross_section.diameter == pytest.approx(0.008)
    assert member.load_share == 1.0

    case = load_case_from_record({"name": "heel-strike", "axial": "1 kN"})
    assert case.axial == pytest.approx(1000.0)
    assert case.moment == 0.0
    assert case.moment_arm == 0.0
    assert load_case_from_record({"name": "heel-strike", "axial": "1 kN"}, config.geometry).moment_arm == \
        pytest.approx(config.geometry.heel_arm)
    explicit = {"name": "opposite-heel-strike", "axial": "1 kN", "moment_arm": "10 cm"}
    assert load_case_from_record(explicit, config.geometry).moment_arm == pytest.approx(0.1)

    with pytest.raises(ConfigError):
        member_from_record({"name": "pin"}, config.catalog)
    with pytest.raises(ConfigError):
        section_record = {"name": "pin", "cross_section": {"type": "hexagon"}, "length": "1 m", "material": "abs"}
        member_from_record(section_record, config.catalog)
    with pytest.raises(ConfigError):
        load_case_from_record({"name": "jumping", "axial": "1 kN"})
    with pytest.raises(ConfigError):
        load_case_from_record({"name": "standing"})
