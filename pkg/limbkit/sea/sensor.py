from dataclasses import dataclass
from typing import Optional

import numpy as np

from limbkit.errors import InvalidQuantity
from limbkit.sea.plant import SeaPlant, SeaState


@dataclass(frozen=True)
class SensorModel:
    """
        Linear potentiometer across the spring: additive Gaussian noise, then rounding to the quantization step.
    """
    noise_std: float = 0.0                  # m
    quantization: float = 1e-5              # m
    kind: str = "linear-potentiometer"

    def __post_init__(self):
        if self.noise_std < 0 or self.quantization < 0:
            raise InvalidQuantity("sensor noise_std and quantization must not be negative")

    @classmethod
    def ideal(cls) -> "SensorModel":
        return cls(noise_std=0.0, quantization=0.0)

    @property
    def is_ideal(self) -> bool:
        return self.noise_std == 0.0 and self.quantization == 0.0

    def read(self, deflection: float, rng: Optional[np.random.Generator] = None) -> float:
        """
            Sensed deflection.
        :param deflection: True spring deflection in m
        :param rng: Noise source; required when noise_std > 0
        :return: Deflection reading in m
        """
        reading = deflection
        if self.noise_std > 0.0:
            reading += rng.normal(0.0, self.noise_std)
        if self.quantization > 0.0:
            reading = self.quantization * round(reading / self.quantization)

        return reading


def measure_force(state: SeaState, plant: SeaPlant, sensor: SensorModel, rng_seed: int = 0) -> float:
    """
        Spring force from the sensed deflection, Hooke's law F = k x.
    :param state: Plant state
    :param plant: Plant
    :param sensor: Deflection sensor
    :param rng_seed: Seed of the noise draw
    :return: Force in N
    """
    rng = np.random.default_rng(rng_seed)

    return plant.spring_stiffness * sensor.read(state.spring_deflection, rng)
