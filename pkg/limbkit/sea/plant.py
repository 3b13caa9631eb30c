"""
    Two-mass series elastic actuator plant.

    The carriage (ball nut plus motor rotor inertia reflected through the screw) is coupled to the load by the series
    spring and a viscous damper in parallel with it. Everything here is in SI floats.
"""
import math
from dataclasses import dataclass, replace
from enum import Enum

from limbkit.actuator.specs import MotorSpec, ScrewSpec
from limbkit.errors import InvalidQuantity
from limbkit.units import Quantity, quantity


class LoadBoundary(str, Enum):
    LOCKED = "locked"
    FREE_MASS = "free-mass"
    PRESCRIBED = "prescribed-motion"


@dataclass(frozen=True)
class SeaPlant:
    """
        Plant parameters in SI units.
    """
    reflected_mass: float                   # kg
    spring_stiffness: float                 # N/m
    viscous_damping: float                  # N*s/m
    load_mass: float                        # kg
    force_limit: float                      # N
    speed_limit: float                      # m/s
    coulomb_friction: float = 0.0           # N

    def __post_init__(self):
        for name in ("reflected_mass", "spring_stiffness", "load_mass", "force_limit", "speed_limit"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise InvalidQuantity(f"{name} must be positive, got {value}")
        if self.viscous_damping < 0 or self.coulomb_friction < 0:
            raise InvalidQuantity("viscous_damping and coulomb_friction must not be negative")

    @classmethod
    def from_specs(cls, motor: MotorSpec, screw: ScrewSpec, spring_stiffness: Quantity,
                   viscous_damping: Quantity, load_mass: Quantity, coulomb_friction: Quantity = None,
                   rotor_inertia: Quantity = None) -> "SeaPlant":
        """
            Derive the plant from the drivetrain.

            reflected mass = J * (2 pi / L)^2, force limit = tau_m * 2 pi eta / L, speed limit = omega_m * L.
        :return: SeaPlant
        """
        inertia = rotor_inertia if rotor_inertia is not None else motor.rotor_inertia
        if inertia is None:
            raise InvalidQuantity("the SEA plant needs the motor rotor inertia")

        lead = screw.lead_m
        ratio = 2.0 * math.pi / lead

        return cls(
            reflected_mass=quantity(inertia, "inertia").m_as("kg*m**2") * ratio ** 2,
            spring_stiffness=quantity(spring_stiffness, "stiffness").m_as("N/m"),
            viscous_damping=quantity(viscous_damping, "damping").m_as("N*s/m"),
            load_mass=quantity(load_mass, "mass").m_as("kg"),
            force_limit=motor.operating_torque.m_as("N*m") * ratio * screw.efficiency,
            speed_limit=motor.speed_rev_s * lead,
            coulomb_friction=quantity(coulomb_friction, "force").m_as("N") if coulomb_friction is not None else 0.0,
        )

    def with_stiffness(self, spring_stiffness: float) -> "SeaPlant":
        return replace(self, spring_stiffness=float(spring_stiffness))


@dataclass(frozen=True)
class SeaState:
    carriage_position: float = 0.0          # m
    carriage_velocity: float = 0.0          # m/s
    load_position: float = 0.0              # m
    load_velocity: float = 0.0              # m/s
    time: float = 0.0                       # s

    @property
    def spring_deflection(self) -> float:
        return self.carriage_position - self.load_position

    @classmethod
    def deflected(cls, deflection: float) -> "SeaState":
        """
            Rest state with the carriage displaced from a load at the origin.
        """
        return cls(carriage_position=deflection)


def plant_energy(state, plant: SeaPlant, boundary: LoadBoundary = LoadBoundary.FREE_MASS):
    """
        Kinetic plus spring energy. The load contributes kinetic energy only when it is a free mass.
    :param state: SeaState, or a Trajectory for the energy at every sample
    :return: Energy in J, a float or an array
    """
    energy = 0.5 * plant.reflected_mass * state.carriage_velocity ** 2 \
        + 0.5 * plant.spring_stiffness * state.spring_deflection ** 2

    if LoadBoundary(boundary) == LoadBoundary.FREE_MASS:
        energy = energy + 0.5 * plant.load_mass * state.load_velocity ** 2

    return energy
