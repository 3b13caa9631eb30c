"""
    Plain-text rasters.

    First line: ``width height spacing_mm sentinel``. Then ``width * height`` values in row-major order, separated by
    whitespace and usually one row per line. Blank lines and lines starting with ``#`` are ignored.
"""
from pathlib import Path
from typing import List, Union

import numpy as np

from limbkit.errors import InvalidInput, MalformedRaster
from limbkit.socket_map.mapper import DepthGrid, sentinel_mask
from limbkit.utils.export import write_lines

PathLike = Union[str, Path]


def _number(token: str, path, line: int) -> float:
    try:
        return float(token)
    except ValueError:
        raise MalformedRaster(path, line, f"not a number: {token!r}") from None


def read_raster(path: PathLike) -> DepthGrid:
    """
        Load a depth raster.
    :param path: Raster file
    :return: DepthGrid
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise MalformedRaster(path, 0, f"cannot read raster: {e.strerror or e}") from e

    lines = [(i + 1, line.split()) for i, line in enumerate(text.splitlines())
             if line.strip() and not line.lstrip().startswith("#")]
    if not lines:
        raise MalformedRaster(path, 1, "empty raster, expected header 'width height spacing_mm sentinel'")

    header_line, header = lines[0]
    if len(header) != 4:
        raise MalformedRaster(path, header_line, "header must be 'width height spacing_mm sentinel'")
    width, height = (_number(token, path, header_line) for token in header[:2])
    spacing, sentinel = (_number(token, path, header_line) for token in header[2:])
    if width != int(width) or height != int(height) or width < 1 or height < 1:
        raise MalformedRaster(path, header_line, "width and height must be positive integers")
    if not spacing > 0:
        raise MalformedRaster(path, header_line, "spacing_mm must be positive")
    width, height = int(width), int(height)
    expected = width * height

    values: List[float] = []
    last_line = header_line
    for number, tokens in lines[1:]:
        for token in tokens:
            value = _number(token, path, number)
            if not sentinel_mask(value, sentinel) and not (np.isfinite(value) and value >= 0):
                raise MalformedRaster(path, number, f"depth must be a non-negative number, got {token}")
            values.append(value)
        if len(values) > expected:
            raise MalformedRaster(path, number, f"more than {expected} cells for a {width}x{height} raster")
        last_line = number

    if len(values) != expected:
        raise MalformedRaster(path, last_line, f"expected {expected} cells for a {width}x{height} raster, "
                                               f"got {len(values)}")

    try:
        return DepthGrid(np.array(values).reshape(height, width), spacing, sentinel)
    except InvalidInput as e:
        raise MalformedRaster(path, header_line, str(e)) from e


def format_raster(values: np.ndarray, spacing_mm: float, sentinel: float) -> List[str]:
    """
        Raster lines for a 2D array. Integer arrays are written as integers, floats at full precision.
    """
    values = np.asarray(values)
    if values.ndim != 2:
        raise InvalidInput("raster values must be a 2D array")
    height, width = values.shape
    integral = np.issubdtype(values.dtype, np.integer)

    def cell(v):
        return str(int(v)) if integral else repr(float(v))

    header = f"{width} {height} {repr(float(spacing_mm))} {cell(sentinel)}"

    return [header] + [" ".join(cell(v) for v in row) for row in values]


def write_raster(values: np.ndarray, path: PathLike, spacing_mm: float, sentinel: float):
    write_lines(format_raster(values, spacing_mm, sentinel), path)
