"""
    Closed-form Von Mises checks of the frame members.

    Joints are rigid and each member is checked on its own. The member carries ``load_share`` of the case: the axial
    force spreads over the section, the shear force acts at ``moment_arm`` and bends the member, and the worst fiber
    sees the axial and bending stresses with the same sign. No stress concentration factors are applied.
"""
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence

import pandas as pd

from limbkit.errors import InvalidInput
from limbkit.stress.members import LoadCase, MemberGeometry

REPORT_COLUMNS = ["member", "case", "axial_pa", "bending_pa", "shear_pa", "von_mises_pa", "utilization", "safe",
                  "safety_factor"]


def von_mises(axial: float, bending: float, shear: float) -> float:
    """
        Equivalent stress of a uniaxial normal stress plus a shear stress.
    :param axial: Axial normal stress
    :param bending: Bending normal stress at the same fiber
    :param shear: Shear stress
    :return: sqrt((axial + bending)^2 + 3 shear^2), in the unit of the inputs
    """
    return math.hypot(axial + bending, math.sqrt(3.0) * shear)


@dataclass(frozen=True)
class StressReport:
    member: str
    case: str
    axial_stress: float                     # Pa
    bending_stress: float                   # Pa
    shear_stress: float                     # Pa
    von_mises: float                        # Pa
    utilization: float                      # von_mises / yield_strength

    @property
    def safe(self) -> bool:
        return self.utilization < 1.0

    @property
    def safety_factor(self) -> float:
        return math.inf if self.utilization == 0.0 else 1.0 / self.utilization

    def to_record(self) -> dict:
        return {
            "member": self.member,
            "case": self.case,
            "axial_pa": self.axial_stress,
            "bending_pa": self.bending_stress,
            "shear_pa": self.shear_stress,
            "von_mises_pa": self.von_mises,
            "utilization": self.utilization,
            "safe": self.safe,
            "safety_factor": self.safety_factor,
        }


def evaluate_case(member: MemberGeometry, case: LoadCase) -> StressReport:
    """
        Stresses of one member under one load case.
    :param member: MemberGeometry
    :param case: LoadCase
    :return: StressReport
    """
    section = member.cross_section
    axial_force = member.load_share * case.axial
    shear_force = member.load_share * case.shear

    axial = abs(axial_force) / section.area
    bending = abs(shear_force * case.moment_arm) * section.extreme_fiber / section.second_moment
    shear = abs(shear_force) / section.area
    equivalent = von_mises(axial, bending, shear)

    return StressReport(member.name, case.name, axial, bending, shear, equivalent,
                        equivalent / member.material.yield_strength.m_as("Pa"))


def run_all_cases(members: Sequence[MemberGeometry], cases: Sequence[LoadCase]) -> List[StressReport]:
    """
        Every member under every case, members outermost.
    :return: len(members) * len(cases) reports
    """
    if not members or not cases:
        raise InvalidInput("stress check needs at least one member and one load case")

    return [evaluate_case(member, case) for member in members for case in cases]


def worst_case(reports: Sequence[StressReport]) -> Optional[StressReport]:
    # first report wins ties
    return max(reports, key=lambda r: r.utilization, default=None)


def to_frame(reports: Sequence[StressReport]) -> pd.DataFrame:
    return pd.DataFrame([report.to_record() for report in reports], columns=REPORT_COLUMNS)
