"""
    Overall dimensions of the prosthesis and the foot proportions that place the load under it.

    The foot is sized from the resting length: a foot of 0.4 resting lengths (266 mm for 665 mm, the foot of a
    1.75 m adult at 0.152 body heights). The rail axis sits above the ankle; the heel lies a quarter foot length behind
    it and the ball of the foot about half a foot length in front. Heel strike loads the heel, opposite heel strike
    loads the ball of the foot while the heel of this leg has lifted.
"""
from dataclasses import dataclass

from limbkit.errors import ConfigError, InvalidInput
from limbkit.units import quantity


@dataclass(frozen=True)
class FrameGeometry:
    resting_length: float                   # m, knee retracted
    effective_travel: float                 # m
    overall_weight: float                   # kg, budget of the whole prosthesis
    foot_length_ratio: float = 0.4          # foot length / resting length
    heel_offset_ratio: float = 0.25         # heel behind the rail axis / foot length
    ball_offset_ratio: float = 0.48         # ball of the foot ahead of the rail axis / foot length

    def __post_init__(self):
        if not (self.resting_length > 0 and self.effective_travel > 0 and self.overall_weight > 0):
            raise InvalidInput("resting length, effective travel and overall weight must be positive")
        if not 0.0 < self.foot_length_ratio < 1.0:
            raise InvalidInput("foot_length_ratio must be in (0, 1)")
        if not (0.0 <= self.heel_offset_ratio <= 1.0 and 0.0 <= self.ball_offset_ratio <= 1.0):
            raise InvalidInput("heel and ball offsets must be in [0, 1] foot lengths")

    @property
    def extended_length(self) -> float:
        return self.resting_length + self.effective_travel

    @property
    def foot_length(self) -> float:
        return self.foot_length_ratio * self.resting_length

    @property
    def heel_arm(self) -> float:
        return self.heel_offset_ratio * self.foot_length

    @property
    def ball_arm(self) -> float:
        return self.ball_offset_ratio * self.foot_length

    def moment_arm(self, case_name: str) -> float:
        """
            Default moment arm of a load case: heel for heel strike, ball of the foot for opposite heel strike.
        """
        return {"heel-strike": self.heel_arm, "opposite-heel-strike": self.ball_arm}.get(case_name, 0.0)

    def weight_fraction(self, mass: float) -> float:
        """
            Share of the overall weight budget taken by a part of ``mass`` kg.
        """
        return mass / self.overall_weight

    def to_record(self) -> dict:
        return {
            "resting_length_m": self.resting_length,
            "extended_length_m": self.extended_length,
            "effective_travel_m": self.effective_travel,
            "overall_weight_kg": self.overall_weight,
            "foot_length_m": self.foot_length,
            "heel_arm_m": self.heel_arm,
            "ball_arm_m": self.ball_arm,
        }


def geometry_from_record(record: dict, effective_travel: float) -> FrameGeometry:
    """
        Build the frame geometry from its configuration record.
    :param record: dict with resting_length, overall_weight and optional foot proportions
    :param effective_travel: Effective linear travel of the screw in m
    :return: FrameGeometry
    """
    try:
        return FrameGeometry(
            resting_length=quantity(record["resting_length"], "length").m_as("m"),
            effective_travel=effective_travel,
            overall_weight=quantity(record["overall_weight"], "mass").m_as("kg"),
            foot_length_ratio=float(record.get("foot_length_ratio", 0.4)),
            heel_offset_ratio=float(record.get("heel_offset_ratio", 0.25)),
            ball_offset_ratio=float(record.get("ball_offset_ratio", 0.48)),
        )
    except KeyError as e:
        raise ConfigError(f"geometry record is missing field {e}") from e
