"""
    Fixed-step simulation of the SEA under closed-loop force control.

    Semi-implicit (symplectic) Euler: velocities are advanced with the forces of the current positions, positions with
    the new velocities.
"""
import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from limbkit.errors import InvalidInput, NumericalDivergence
from limbkit.sea.controller import ForceController, ForceLoop
from limbkit.sea.plant import LoadBoundary, SeaPlant, SeaState, plant_energy
from limbkit.sea.sensor import SensorModel

Command = Callable[[float], float]
LoadMotion = Callable[[float], Tuple[float, float]]

TRAJECTORY_COLUMNS = ["time_s", "carriage_pos_m", "load_pos_m", "deflection_m", "measured_force_n",
                      "commanded_force_n", "desired_force_n"]


@dataclass(frozen=True)
class DivergenceBound:
    max_position: float = 10.0              # m
    max_velocity: float = 1000.0            # m/s


def step_command(force: float, start: float = 0.0) -> Command:
    return lambda t: force if t >= start else 0.0


def sine_command(amplitude: float, omega: float, offset: float = 0.0) -> Command:
    return lambda t: offset + amplitude * math.sin(omega * t)


def table_command(times: Sequence[float], forces: Sequence[float]) -> Command:
    """
        Piecewise-linear command through (time, force) samples, held constant outside them.
    """
    times = np.asarray(times, dtype=float)
    forces = np.asarray(forces, dtype=float)
    if times.ndim != 1 or times.shape != forces.shape or len(times) == 0:
        raise InvalidInput("command table needs matching, non-empty time and force columns")
    if np.any(np.diff(times) <= 0):
        raise InvalidInput("command table times must be strictly increasing")

    return lambda t: float(np.interp(t, times, forces))


def sine_motion(amplitude: float, omega: float) -> LoadMotion:
    return lambda t: (amplitude * math.sin(omega * t), amplitude * omega * math.cos(omega * t))


def _check_dt(dt: float, controller: Optional[ForceController]):
    if not dt > 0:
        raise InvalidInput("dt must be positive")
    if controller is not None and dt > 0.5 * controller.sample_period * (1.0 + 1e-9):
        raise InvalidInput(f"dt={dt} exceeds half the controller sample period {controller.sample_period}")


def _advance(xc: float, vc: float, xl: float, vl: float, time: float, force: float, plant: SeaPlant,
             boundary: LoadBoundary, dt: float, load_motion: Optional[LoadMotion],
             bound: DivergenceBound) -> Tuple[float, float, float, float]:
    spring = plant.spring_stiffness * (xc - xl) + plant.viscous_damping * (vc - vl)
    net = force - spring

    friction = plant.coulomb_friction
    if friction > 0.0:
        if vc != 0.0:
            net -= math.copysign(friction, vc)
        elif abs(net) <= friction:
            net = 0.0
        else:
            net -= math.copysign(friction, net)

    vc += dt * net / plant.reflected_mass
    if vc > plant.speed_limit:
        vc = plant.speed_limit
    elif vc < -plant.speed_limit:
        vc = -plant.speed_limit
    xc += dt * vc

    if boundary == LoadBoundary.FREE_MASS:
        vl += dt * spring / plant.load_mass
        xl += dt * vl
    elif boundary == LoadBoundary.PRESCRIBED:
        xl, vl = load_motion(time + dt)
    else:
        vl = 0.0

    for name, value, limit in (("carriage_position", xc, bound.max_position),
                               ("load_position", xl, bound.max_position),
                               ("carriage_velocity", vc, bound.max_velocity),
                               ("load_velocity", vl, bound.max_velocity)):
        if not abs(value) <= limit:
            raise NumericalDivergence(time + dt, name, value)

    return xc, vc, xl, vl


def step(state: SeaState, plant: SeaPlant, loop: Optional[ForceLoop], desired_force: float, dt: float,
         sensor: Optional[SensorModel] = None, rng: Optional[np.random.Generator] = None,
         boundary: LoadBoundary = LoadBoundary.LOCKED, load_motion: Optional[LoadMotion] = None,
         bound: DivergenceBound = DivergenceBound()) -> SeaState:
    """
        Advance the plant by one time step.
    :param state: Current state
    :param plant: Plant
    :param loop: Running force controller, None for an unpowered motor
    :param desired_force: Desired spring force in N
    :param dt: Time step in s, at most half the controller sample period
    :param sensor: Deflection sensor, ideal when None
    :param rng: Noise source of the sensor
    :param boundary: Load boundary condition
    :param load_motion: Load (position, velocity) as a function of time for prescribed motion
    :param bound: Blow-up bound
    :return: Next state
    """
    boundary = LoadBoundary(boundary)
    _check_dt(dt, loop.controller if loop is not None else None)

    deflection = state.spring_deflection
    reading = sensor.read(deflection, rng) if sensor is not None else deflection
    measured = plant.spring_stiffness * reading
    force = loop.update(state.time, desired_force, measured) if loop is not None else 0.0

    xc, vc, xl, vl = _advance(state.carriage_position, state.carriage_velocity, state.load_position,
                              state.load_velocity, state.time, force, plant, boundary, dt, load_motion, bound)

    return SeaState(xc, vc, xl, vl, state.time + dt)


@dataclass(frozen=True)
class Trajectory:
    """
        Uniformly sampled run: sample i holds the state at time i*dt, the force measured in that state, and the
        motor command and desired force applied over the following step.
    """
    time: np.ndarray
    carriage_position: np.ndarray
    carriage_velocity: np.ndarray
    load_position: np.ndarray
    load_velocity: np.ndarray
    measured_force: np.ndarray
    commanded_force: np.ndarray
    desired_force: np.ndarray
    saturated: np.ndarray
    spring_stiffness: float

    @property
    def deflection(self) -> np.ndarray:
        return self.carriage_position - self.load_position

    spring_deflection = deflection

    @property
    def true_force(self) -> np.ndarray:
        return self.spring_stiffness * self.deflection

    @property
    def saturation_count(self) -> int:
        return int(np.count_nonzero(self.saturated))

    def __len__(self) -> int:
        return len(self.time)

    def state(self, index: int) -> SeaState:
        return SeaState(float(self.carriage_position[index]), float(self.carriage_velocity[index]),
                        float(self.load_position[index]), float(self.load_velocity[index]), float(self.time[index]))

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({
            "time_s": self.time,
            "carriage_pos_m": self.carriage_position,
            "load_pos_m": self.load_position,
            "deflection_m": self.deflection,
            "measured_force_n": self.measured_force,
            "commanded_force_n": self.commanded_force,
            "desired_force_n": self.desired_force,
        }, columns=TRAJECTORY_COLUMNS)


def simulate(plant: SeaPlant, ctrl: Optional[ForceController], sensor: Optional[SensorModel],
             command: Union[Command, float], load_boundary: Union[LoadBoundary, str] = LoadBoundary.LOCKED,
             dt: float = 1e-4, duration: float = 1.0, seed: int = 0, initial_state: Optional[SeaState] = None,
             load_motion: Optional[LoadMotion] = None, bound: DivergenceBound = DivergenceBound()) -> Trajectory:
    """
        Run the closed loop for ``duration`` seconds.
    :param plant: Plant
    :param ctrl: Force controller, None for an unpowered motor (free plant)
    :param sensor: Deflection sensor, ideal when None
    :param command: Desired force as a function of time, or a constant
    :param load_boundary: locked, free-mass or prescribed-motion
    :param dt: Time step in s
    :param duration: Simulated time in s
    :param seed: Seed of the sensor noise
    :param initial_state: Starting state, rest at the origin when None
    :param load_motion: Load (position, velocity) as a function of time, for prescribed-motion
    :param bound: Blow-up bound
    :return: Trajectory with round(duration / dt) samples
    """
    boundary = LoadBoundary(load_boundary)
    if duration < 0:
        raise InvalidInput("duration must not be negative")
    _check_dt(dt, ctrl)
    if boundary == LoadBoundary.PRESCRIBED and load_motion is None:
        raise InvalidInput("prescribed-motion needs a load_motion")
    if not callable(command):
        command = step_command(float(command))

    if initial_state is None:
        initial_state = SeaState()
        if boundary == LoadBoundary.PRESCRIBED:
            xl0, vl0 = load_motion(0.0)
            initial_state = SeaState(carriage_position=xl0, load_position=xl0, load_velocity=vl0)

    n_samples = int(round(duration / dt))
    rng = np.random.default_rng(seed)
    loop = ForceLoop(ctrl, plant.force_limit) if ctrl is not None else None
    k = plant.spring_stiffness

    xc, vc = initial_state.carriage_position, initial_state.carriage_velocity
    xl, vl = initial_state.load_position, initial_state.load_velocity
    t0 = initial_state.time

    columns: List[list] = [[] for _ in range(9)]
    times, cps, cvs, lps, lvs, measured_l, commanded_l, desired_l, saturated_l = columns

    for i in range(n_samples):
        time = t0 + i * dt
        desired = command(time)
        deflection = xc - xl
        measured = k * (sensor.read(deflection, rng) if sensor is not None else deflection)

        if loop is not None:
            force = loop.update(time, desired, measured)
            saturated = loop.saturated
        else:
            force = 0.0
            saturated = False

        times.append(time)
        cps.append(xc)
        cvs.append(vc)
        lps.append(xl)
        lvs.append(vl)
        measured_l.append(measured)
        commanded_l.append(force)
        desired_l.append(desired)
        saturated_l.append(saturated)

        xc, vc, xl, vl = _advance(xc, vc, xl, vl, time, force, plant, boundary, dt, load_motion, bound)

    arrays = [np.asarray(c, dtype=float) for c in columns[:8]]

    return Trajectory(*arrays, saturated=np.asarray(saturated_l, dtype=bool), spring_stiffness=k)


def energy_drift_rate(trajectory: Trajectory, plant: SeaPlant,
                      boundary: LoadBoundary = LoadBoundary.FREE_MASS) -> float:
    """
        Relative energy drift per simulated second: slope of a least-squares line through the energy history,
        divided by the initial energy.
    """
    energy = plant_energy(trajectory, plant, boundary)

    slope = np.polyfit(trajectory.time, energy, 1)[0]

    return float(slope / energy[0])
