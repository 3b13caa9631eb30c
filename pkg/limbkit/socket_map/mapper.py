"""
    Socket wall stiffness from residual-limb bone tissue depth.

    The mapping is the affine law Y = 0.0382 X + 1.0882 with X the depth in mm and Y the modulus of the printing
    material. The unit of Y is not stated with the law; it is configurable and defaults to MPa.

    The law increases with depth: deep bone means soft surface tissue, which gets a stiffer socket wall. This is the
    literal reading of the equation, even though the design principle is phrased as stiff body against compliant
    socket.
"""
import logging
import warnings
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np
import pandas as pd

from limbkit.errors import DegenerateRangeWarning, DepthRangeWarning, InvalidInput
from limbkit.units import Q_, Quantity, quantity
from limbkit.utils.reporter import get_reporter

OUTSIDE_BAND = -1


def sentinel_mask(values, sentinel: float) -> np.ndarray:
    """
        Cells holding the no-data value. A NaN sentinel matches NaN cells.
    """
    values = np.asarray(values, dtype=float)
    if np.isnan(sentinel):
        return np.isnan(values)
    return values == sentinel


@dataclass(frozen=True)
class MappingLaw:
    slope: float = 0.0382                   # modulus unit per mm
    intercept: float = 1.0882               # modulus unit
    unit: str = "MPa"
    warn_depth_mm: float = 50.0

    def __post_init__(self):
        if not self.slope > 0:
            raise InvalidInput("the mapping slope must be positive")
        quantity(f"1 {self.unit}", "stress")

    def __call__(self, depth_mm):
        return self.slope * depth_mm + self.intercept

    def as_quantity(self, modulus: float) -> Quantity:
        return Q_(modulus, self.unit)


@dataclass(frozen=True)
class DepthGrid:
    """
        Bone tissue depth raster in mm, row-major with ``height`` rows of ``width`` cells. Cells equal to ``sentinel``
        (or NaN cells, when the sentinel is NaN) lie outside the limb silhouette.
    """
    depth: np.ndarray
    spacing_mm: float = 1.0
    sentinel: float = -1.0

    def __post_init__(self):
        depth = np.array(self.depth, dtype=float)
        if depth.ndim != 2 or depth.size == 0:
            raise InvalidInput("depth grid must be a non-empty 2D array")
        if not self.spacing_mm > 0:
            raise InvalidInput("spacing_mm must be positive")
        inside = depth[~sentinel_mask(depth, self.sentinel)]
        if not np.all(np.isfinite(inside)) or np.any(inside < 0):
            raise InvalidInput("depths inside the limb must be finite and non-negative")
        depth.setflags(write=False)
        object.__setattr__(self, "depth", depth)

    @property
    def height(self) -> int:
        return self.depth.shape[0]

    @property
    def width(self) -> int:
        return self.depth.shape[1]

    @property
    def outside(self) -> np.ndarray:
        return sentinel_mask(self.depth, self.sentinel)


@dataclass(frozen=True)
class StiffnessField:
    """
        Modulus per cell in ``unit``; ``band`` holds the durometer band index once quantized, -1 outside the limb.
    """
    modulus: np.ndarray
    outside: np.ndarray
    unit: str
    sentinel: float
    band: Optional[np.ndarray] = None
    boundaries: Optional[np.ndarray] = None

    @property
    def inside_modulus(self) -> np.ndarray:
        return self.modulus[~self.outside]

    @property
    def n_bands(self) -> int:
        return 0 if self.boundaries is None else len(self.boundaries) - 1


def map_stiffness(grid: DepthGrid, law: MappingLaw = MappingLaw()) -> StiffnessField:
    """
        Apply the depth to modulus law to every cell inside the limb; outside cells keep the sentinel.
    :param grid: DepthGrid
    :param law: Mapping law
    :return: StiffnessField without bands
    """
    outside = grid.outside
    inside = grid.depth[~outside]

    if inside.size and inside.max() > law.warn_depth_mm:
        message = f"{int(np.count_nonzero(inside > law.warn_depth_mm))} cells deeper than {law.warn_depth_mm} mm, " \
                  f"beyond the observed range of the law"
        get_reporter().log(logging.WARNING, message)
        warnings.warn(message, DepthRangeWarning)

    modulus = np.where(outside, grid.sentinel, law(grid.depth))
    modulus.setflags(write=False)

    return StiffnessField(modulus, outside, law.unit, grid.sentinel)


def band_boundaries(field: StiffnessField, n_bands: int) -> np.ndarray:
    """
        Uniform partition of [min modulus, max modulus] into ``n_bands`` intervals.
    """
    if n_bands < 1:
        raise InvalidInput("n_bands must be at least 1")
    values = field.inside_modulus
    if values.size == 0:
        return np.zeros(n_bands + 1)

    return np.linspace(values.min(), values.max(), n_bands + 1)


def quantize_bands(field: StiffnessField, n_bands: int) -> StiffnessField:
    """
        Assign each cell inside the limb to one of ``n_bands`` uniform modulus bands. Values on an inner boundary
        belong to the upper band.
    :param field: StiffnessField
    :param n_bands: Number of bands, at least 1
    :return: StiffnessField with ``band`` and ``boundaries``
    """
    boundaries = band_boundaries(field, n_bands)
    band = np.full(field.modulus.shape, OUTSIDE_BAND, dtype=int)
    values = field.inside_modulus

    if n_bands > 1 and values.size and boundaries[0] == boundaries[-1]:
        message = f"modulus range is degenerate ({boundaries[0]} {field.unit}), every cell gets band 0"
        get_reporter().log(logging.WARNING, message)
        warnings.warn(message, DegenerateRangeWarning)
        band[~field.outside] = 0
    else:
        band[~field.outside] = np.searchsorted(boundaries[1:-1], values, side="right")

    band.setflags(write=False)

    return replace(field, band=band, boundaries=boundaries)


def verify_inverse_monotonicity(grid: DepthGrid, field: StiffnessField) -> bool:
    """
        True iff every deeper cell has a strictly higher modulus than every shallower cell.
    """
    inside = ~grid.outside
    depth = grid.depth[inside]
    modulus = field.modulus[inside]
    if depth.size == 0:
        return True

    levels, group = np.unique(depth, return_inverse=True)
    lowest = np.full(len(levels), np.inf)
    highest = np.full(len(levels), -np.inf)
    np.minimum.at(lowest, group, modulus)
    np.maximum.at(highest, group, modulus)

    # highest modulus over all shallower depths must stay below the lowest modulus at each depth
    shallower = np.maximum.accumulate(highest)[:-1]

    return bool(np.all(shallower < lowest[1:]))


def band_table(field: StiffnessField) -> pd.DataFrame:
    if field.boundaries is None:
        raise InvalidInput("field has no bands, run quantize_bands first")
    band = field.band[~field.outside]

    return pd.DataFrame({
        "band": np.arange(field.n_bands),
        f"lower_{field.unit}": field.boundaries[:-1],
        f"upper_{field.unit}": field.boundaries[1:],
        "cells": np.bincount(band, minlength=field.n_bands)[:field.n_bands],
    })


def to_frame(grid: DepthGrid, field: StiffnessField) -> pd.DataFrame:
    """
        One row per cell inside the limb.
    """
    rows, cols = np.nonzero(~grid.outside)
    frame = pd.DataFrame({
        "row": rows,
        "col": cols,
        "depth_mm": grid.depth[rows, cols],
        f"modulus_{field.unit}": field.modulus[rows, cols],
    })
    if field.band is not None:
        frame["band"] = field.band[rows, cols]

    return frame


def summary(grid: DepthGrid, field: StiffnessField) -> dict:
    inside = ~grid.outside
    depth = grid.depth[inside]
    modulus = field.modulus[inside]
    record = {
        "cells": int(grid.depth.size),
        "cells_inside": int(depth.size),
        "unit": field.unit,
        "min_depth_mm": float(depth.min()) if depth.size else None,
        "max_depth_mm": float(depth.max()) if depth.size else None,
        "min_modulus": float(modulus.min()) if modulus.size else None,
        "max_modulus": float(modulus.max()) if modulus.size else None,
    }
    if field.band is not None:
        record["cells_per_band"] = np.bincount(field.band[inside], minlength=field.n_bands).tolist()

    return record
