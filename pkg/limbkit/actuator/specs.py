from dataclasses import dataclass
from typing import Optional

from limbkit.errors import InvalidQuantity
from limbkit.units import Quantity, efficiency, quantity


@dataclass(frozen=True)
class ScrewSpec:
    """
        Ball-screw transmission: lead, nut and shaft diameter, efficiency and the rated axial load of the nut.
    """
    lead: Quantity
    nut_diameter: Quantity
    screw_diameter: Quantity
    efficiency: float
    rated_load: Quantity

    def __post_init__(self):
        object.__setattr__(self, "lead", quantity(self.lead, "lead"))
        object.__setattr__(self, "nut_diameter", quantity(self.nut_diameter, "length"))
        object.__setattr__(self, "screw_diameter", quantity(self.screw_diameter, "length"))
        object.__setattr__(self, "efficiency", efficiency(self.efficiency))
        object.__setattr__(self, "rated_load", quantity(self.rated_load, "force"))

        if self.lead_m <= 0:
            raise InvalidQuantity("screw lead must be positive")
        if self.rated_load.m_as("N") <= 0:
            raise InvalidQuantity("screw rated load must be positive")

    @property
    def lead_m(self) -> float:
        """Lead in meters per revolution."""
        return self.lead.m_as("m / revolution")

    @classmethod
    def from_dict(cls, data: dict) -> "ScrewSpec":
        return cls(
            lead=data["lead"],
            nut_diameter=data["nut_diameter"],
            screw_diameter=data["screw_diameter"],
            efficiency=data["efficiency"],
            rated_load=data["rated_load"],
        )


@dataclass(frozen=True)
class MotorSpec:
    """
        Servomotor operating point. The rotor inertia is only used by the SEA simulation.
    """
    operating_speed: Quantity
    operating_torque: Quantity
    supply_voltage: Quantity
    mass: Quantity
    rotor_inertia: Optional[Quantity] = None

    def __post_init__(self):
        object.__setattr__(self, "operating_speed", quantity(self.operating_speed, "angular_speed"))
        object.__setattr__(self, "operating_torque", quantity(self.operating_torque, "torque"))
        object.__setattr__(self, "supply_voltage", quantity(self.supply_voltage, "voltage"))
        object.__setattr__(self, "mass", quantity(self.mass, "mass"))
        if self.rotor_inertia is not None:
            object.__setattr__(self, "rotor_inertia", quantity(self.rotor_inertia, "inertia"))

        if self.operating_speed.m_as("rpm") <= 0:
            raise InvalidQuantity("motor operating speed must be positive")
        if self.operating_torque.m_as("N*m") <= 0:
            raise InvalidQuantity("motor operating torque must be positive")

    @property
    def speed_rev_s(self) -> float:
        return self.operating_speed.m_as("revolution / second")

    @classmethod
    def from_dict(cls, data: dict) -> "MotorSpec":
        return cls(
            operating_speed=data["operating_speed"],
            operating_torque=data["operating_torque"],
            supply_voltage=data["supply_voltage"],
            mass=data["mass"],
            rotor_inertia=data.get("rotor_inertia"),
        )
