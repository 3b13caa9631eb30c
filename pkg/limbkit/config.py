"""
    Toolkit configuration.

    Resolution order: the packaged default design (data/prosthesis.json) < the configuration file (deep-merged over
    the defaults) < command-line overrides. The file is taken from the explicit path, else from the LIMBKIT_CONFIG
    environment variable, else only the defaults are used.
"""
import copy
import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Tuple, Union

import pint

from limbkit.actuator import MotorSpec, ScrewSpec, nut_load_force
from limbkit.errors import ConfigError, LimbkitError
from limbkit.gait import GaitPhase, GaitProfile, LoadShape, build_profile, check_partition
from limbkit.sea import DivergenceBound, ForceController, SeaPlant, SensorModel, SweepSettings
from limbkit.socket_map import MappingLaw
from limbkit.stress import (FrameGeometry, LoadCase, MemberGeometry, geometry_from_record, load_case_from_record,
                            member_from_record)
from limbkit.units import MaterialCatalog, Quantity, load_catalog, parse, quantity

DEFAULT_CONFIG = Path(__file__).resolve().parent / "data" / "prosthesis.json"
CONFIG_ENV = "LIMBKIT_CONFIG"


def deep_merge(base: dict, override: dict) -> dict:
    """
        Recursively merge ``override`` into a copy of ``base``. Nested dicts merge, everything else is replaced.
    """
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = deep_merge(merged[key], value)
        else:
            merged[key] = copy.deepcopy(value)

    return merged


def read_json(path: Union[str, Path]) -> dict:
    path = Path(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except FileNotFoundError:
        raise ConfigError(f"configuration file not found: {path}") from None
    except OSError as e:
        raise ConfigError(f"cannot read configuration file {path}: {e.strerror or e}") from e
    except json.JSONDecodeError as e:
        raise ConfigError(f"{path}:{e.lineno}: invalid JSON: {e.msg}") from e

    if not isinstance(data, dict):
        raise ConfigError(f"{path}: the configuration must be a JSON object")

    return data


def resolve_path(path: Optional[Union[str, Path]] = None) -> Optional[Path]:
    if path is not None:
        return Path(path)
    env = os.environ.get(CONFIG_ENV)

    return Path(env) if env else None


@dataclass(frozen=True)
class SizingInputs:
    body_weight: Quantity
    load_factor: float
    linear_speed: Quantity
    effective_travel: Quantity

    @property
    def design_load(self) -> Quantity:
        return nut_load_force(self.body_weight, self.load_factor)


@dataclass(frozen=True)
class ToolkitConfig:
    """
        The resolved configuration. ``raw`` holds the merged JSON it was built from.
    """
    raw: dict
    source: Optional[Path]
    motor: MotorSpec
    screw: ScrewSpec
    sizing: SizingInputs
    spring_stiffness: float                 # N/m
    viscous_damping: float                  # N*s/m
    load_mass: float                        # kg
    coulomb_friction: float                 # N
    sensor: SensorModel
    controller: ForceController
    dt: float                               # s
    duration: float                         # s
    step_force: float                       # N
    bound: DivergenceBound
    sweep: SweepSettings
    force_amplitude: float                  # N
    motion_amplitude: float                 # m
    impedance_frequency_hz: float
    sweep_ideal_sensor: bool
    stiffness_list: Tuple[float, ...]       # N/m
    window_bandwidth_hz: float
    window_max_impedance: float             # N/m
    window_frequency_hz: float
    stride_duration: float                  # s
    travel_fraction: float
    gait_sample_rate: float                 # Hz
    phases: Tuple[GaitPhase, ...]
    load_shape: LoadShape
    mapping_law: MappingLaw
    n_bands: int
    catalog: MaterialCatalog
    geometry: FrameGeometry
    members: Tuple[MemberGeometry, ...]
    load_cases: Tuple[LoadCase, ...]
    output_dir: Path
    seed: int

    def plant(self, spring_stiffness: Optional[float] = None) -> SeaPlant:
        return SeaPlant.from_specs(self.motor, self.screw,
                                   quantity(spring_stiffness if spring_stiffness is not None
                                            else self.spring_stiffness, "stiffness"),
                                   quantity(self.viscous_damping, "damping"), quantity(self.load_mass, "mass"),
                                   quantity(self.coulomb_friction, "force"))

    def sweep_sensor(self) -> SensorModel:
        return SensorModel.ideal() if self.sweep_ideal_sensor else self.sensor

    def gait_profile(self) -> GaitProfile:
        return build_profile(self.sizing.body_weight, self.stride_duration, self.sizing.load_factor, self.phases,
                             self.load_shape, self.sizing.effective_travel, self.travel_fraction)


def _si(section: dict, key: str, kind: str, unit: str) -> float:
    return quantity(section[key], kind).m_as(unit)


def build_config(data: dict, source: Optional[Path] = None) -> ToolkitConfig:
    """
        Validate a merged configuration dict.
    :param data: Configuration with every section present
    :param source: File the values came from, for messages
    :return: ToolkitConfig
    """
    where = source or DEFAULT_CONFIG
    try:
        sizing, plant, sensor, ctrl = data["sizing"], data["plant"], data["sensor"], data["controller"]
        simulation, sweep, window, gait, socket = (data["simulation"], data["sweep"], data["spring_window"],
                                                   data["gait"], data["socket"])
        catalog = load_catalog(data["materials"]) if data.get("materials") else load_catalog()
        shape = gait.get("load_shape", {})
        phases = tuple(GaitPhase(p["name"], float(p["start_fraction"]), float(p["end_fraction"]))
                       for p in gait["phases"])
        check_partition(phases)
        geometry = geometry_from_record(data["geometry"],
                                        quantity(sizing["effective_travel"], "length").m_as("m"))

        return ToolkitConfig(
            raw=data,
            source=source,
            motor=MotorSpec.from_dict(data["motor"]),
            screw=ScrewSpec.from_dict(data["screw"]),
            sizing=SizingInputs(
                body_weight=quantity(sizing["body_weight"], "force"),
                load_factor=float(sizing["load_factor"]),
                linear_speed=quantity(sizing["linear_speed"], "linear_speed"),
                effective_travel=quantity(sizing["effective_travel"], "length"),
            ),
            spring_stiffness=_si(data["spring"], "stiffness", "stiffness", "N/m"),
            viscous_damping=_si(plant, "viscous_damping", "damping", "N*s/m"),
            load_mass=_si(plant, "load_mass", "mass", "kg"),
            coulomb_friction=_si(plant, "coulomb_friction", "force", "N"),
            sensor=SensorModel(noise_std=_si(sensor, "noise_std", "length", "m"),
                               quantization=_si(sensor, "quantization", "length", "m"),
                               kind=sensor.get("kind", "linear-potentiometer")),
            controller=ForceController(
                kp=parse(ctrl["kp"]).m_as("dimensionless"),
                ki=_si(ctrl, "ki", "frequency", "1/s"),
                kd=_si(ctrl, "kd", "time", "s"),
                sample_rate=_si(ctrl, "sample_rate", "frequency", "Hz"),
                derivative_filter_hz=_si(ctrl, "derivative_filter", "frequency", "Hz")
                if ctrl.get("derivative_filter") is not None else None,
            ),
            dt=_si(simulation, "dt", "time", "s"),
            duration=_si(simulation, "duration", "time", "s"),
            step_force=_si(simulation, "step_force", "force", "N"),
            bound=DivergenceBound(_si(simulation, "max_position", "length", "m"),
                                  _si(simulation, "max_velocity", "linear_speed", "m/s")),
            sweep=SweepSettings(
                min_frequency_hz=_si(sweep, "min_frequency", "frequency", "Hz"),
                max_frequency_hz=_si(sweep, "max_frequency", "frequency", "Hz"),
                points=int(sweep["points"]),
                settle_time=_si(sweep, "settle_time", "time", "s"),
                periods=int(sweep["periods"]),
                dt=_si(simulation, "dt", "time", "s"),
                seed=int(data["seed"]),
                bound=DivergenceBound(_si(simulation, "max_position", "length", "m"),
                                      _si(simulation, "max_velocity", "linear_speed", "m/s")),
            ),
            force_amplitude=_si(sweep, "force_amplitude", "force", "N"),
            motion_amplitude=_si(sweep, "motion_amplitude", "length", "m"),
            impedance_frequency_hz=_si(sweep, "impedance_frequency", "frequency", "Hz"),
            sweep_ideal_sensor=bool(sweep.get("ideal_sensor", True)),
            stiffness_list=tuple(quantity(k, "stiffness").m_as("N/m") for k in sweep["stiffness_list"]),
            window_bandwidth_hz=_si(window, "target_bandwidth", "frequency", "Hz"),
            window_max_impedance=_si(window, "max_impedance", "stiffness", "N/m"),
            window_frequency_hz=_si(window, "impedance_frequency", "frequency", "Hz"),
            stride_duration=_si(gait, "stride_duration", "time", "s"),
            travel_fraction=float(gait.get("travel_fraction", 0.5)),
            gait_sample_rate=_si(gait, "sample_rate", "frequency", "Hz"),
            phases=phases,
            load_shape=LoadShape(**{key: tuple(value) for key, value in shape.items()}),
            mapping_law=MappingLaw(float(socket["slope"]), float(socket["intercept"]), str(socket["modulus_unit"]),
                                   _si(socket, "warn_depth", "length", "mm")),
            n_bands=int(socket["bands"]),
            catalog=catalog,
            geometry=geometry,
            members=tuple(member_from_record(record, catalog) for record in data["members"]),
            load_cases=tuple(load_case_from_record(record, geometry) for record in data["load_cases"]),
            output_dir=Path(data["output_dir"]),
            seed=int(data["seed"]),
        )
    except ConfigError:
        raise
    except LimbkitError as e:
        raise ConfigError(f"{where}: {e}") from e
    except KeyError as e:
        raise ConfigError(f"{where}: missing configuration key {e}") from e
    except (ValueError, TypeError, pint.errors.PintError) as e:
        raise ConfigError(f"{where}: {e}") from e


def load_config(path: Optional[Union[str, Path]] = None, overrides: Optional[dict] = None) -> ToolkitConfig:
    """
        Resolve the configuration.
    :param path: Configuration file, falls back to $LIMBKIT_CONFIG, then to the defaults alone
    :param overrides: Values from the command line, merged last
    :return: ToolkitConfig
    """
    data = read_json(DEFAULT_CONFIG)
    source = resolve_path(path)
    if source is not None:
        data = deep_merge(data, read_json(source))
    if overrides:
        data = deep_merge(data, overrides)

    return build_config(data, source)


def stiffness_values(values: List) -> Tuple[float, ...]:
    """
        Stiffnesses in N/m from flag values; bare numbers are kN/m.
    """
    return tuple(quantity(value, "stiffness", "kN/m").m_as("N/m") for value in values)
