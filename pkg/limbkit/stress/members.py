"""
    Structural members and load cases of the prosthesis frame, in SI floats.
"""
import math
from dataclasses import dataclass
from typing import Optional, Union

from limbkit.errors import ConfigError, InvalidInput
from limbkit.stress.geometry import FrameGeometry
from limbkit.units import MaterialCatalog, MaterialProps, lookup_material, quantity

CASE_NAMES = ("heel-strike", "opposite-heel-strike", "standing")


@dataclass(frozen=True)
class SolidCircle:
    diameter: float                         # m

    def __post_init__(self):
        if not self.diameter > 0:
            raise InvalidInput("diameter must be positive")

    @property
    def area(self) -> float:
        return math.pi * self.diameter ** 2 / 4.0

    @property
    def second_moment(self) -> float:
        return math.pi * self.diameter ** 4 / 64.0

    @property
    def extreme_fiber(self) -> float:
        return self.diameter / 2.0


@dataclass(frozen=True)
class Rectangle:
    """
        Rectangular section bending about the axis parallel to ``width``.
    """
    width: float                            # m
    height: float                           # m

    def __post_init__(self):
        if not (self.width > 0 and self.height > 0):
            raise InvalidInput("width and height must be positive")

    @property
    def area(self) -> float:
        return self.width * self.height

    @property
    def second_moment(self) -> float:
        return self.width * self.height ** 3 / 12.0

    @property
    def extreme_fiber(self) -> float:
        return self.height / 2.0


CrossSection = Union[SolidCircle, Rectangle]


@dataclass(frozen=True)
class MemberGeometry:
    """
        A member carrying ``load_share`` of every load case.
    """
    name: str
    cross_section: CrossSection
    length: float                           # m
    material: MaterialProps
    load_share: float = 1.0

    def __post_init__(self):
        if not self.length > 0:
            raise InvalidInput(f"{self.name}: length must be positive")
        if not 0.0 < self.load_share <= 1.0:
            raise InvalidInput(f"{self.name}: load_share must be in (0, 1]")

    def with_material(self, material: MaterialProps) -> "MemberGeometry":
        return MemberGeometry(self.name, self.cross_section, self.length, material, self.load_share)


@dataclass(frozen=True)
class LoadCase:
    name: str
    axial: float                            # N
    shear: float                            # N
    moment_arm: float                       # m

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.axial, self.shear, self.moment_arm)):
            raise InvalidInput(f"load case {self.name}: forces and arm must be finite")
        if self.moment_arm < 0:
            raise InvalidInput(f"load case {self.name}: moment_arm must not be negative")

    @property
    def moment(self) -> float:
        return self.shear * self.moment_arm

    def scaled(self, factor: float) -> "LoadCase":
        return LoadCase(self.name, self.axial * factor, self.shear * factor, self.moment_arm)


def section_from_record(record: dict) -> CrossSection:
    kind = record.get("type")
    if kind == "solid-circle":
        return SolidCircle(quantity(record["diameter"], "length").m_as("m"))
    if kind == "rectangle":
        return Rectangle(quantity(record["width"], "length").m_as("m"), quantity(record["height"], "length").m_as("m"))
    raise ConfigError(f"unknown cross section type {kind!r}, expected solid-circle or rectangle")


def member_from_record(record: dict, catalog: Optional[MaterialCatalog] = None) -> MemberGeometry:
    """
        Build a member from its configuration record.
    :param record: dict with name, cross_section, length, material and optional load_share
    :param catalog: Material catalog, the packaged one when None
    :return: MemberGeometry
    """
    missing = [key for key in ("name", "cross_section", "length", "material") if key not in record]
    if missing:
        raise ConfigError(f"member record is missing field(s) {', '.join(missing)}")

    return MemberGeometry(
        name=str(record["name"]),
        cross_section=section_from_record(record["cross_section"]),
        length=quantity(record["length"], "length").m_as("m"),
        material=lookup_material(record["material"], catalog),
        load_share=float(record.get("load_share", 1.0)),
    )


def load_case_from_record(record: dict, geometry: Optional[FrameGeometry] = None) -> LoadCase:
    """
        Build a load case from its configuration record. Without a ``moment_arm`` the arm comes from ``geometry``
        (heel or ball of the foot), or is zero.
    """
    try:
        name = str(record["name"])
        if name not in CASE_NAMES:
            raise ConfigError(f"unknown load case {name!r}, expected one of {', '.join(CASE_NAMES)}")
        return LoadCase(
            name=name,
            axial=quantity(record["axial"], "force").m_as("N"),
            shear=quantity(record.get("shear", 0.0), "force").m_as("N"),
            moment_arm=(quantity(record["moment_arm"], "length").m_as("m") if "moment_arm" in record
                        else geometry.moment_arm(name) if geometry is not None else 0.0),
        )
    except KeyError as e:
        raise ConfigError(f"load case record is missing field {e}") from e
