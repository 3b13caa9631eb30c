"""
    Result writers. Every file is written to a temporary sibling first and renamed into place, so a reader never sees
    a partial file.
"""
import json
import logging
import os
import tempfile
from contextlib import contextmanager
from pathlib import Path
from typing import Iterable, Union

import numpy as np
import pandas as pd

from limbkit.utils.reporter import get_reporter

PathLike = Union[str, Path]


@contextmanager
def atomic_write(path: PathLike):
    """
        Open a text file for writing that only appears at ``path`` once the block exits without error.
    :param path: Destination
    :return: Writable text stream
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, temp_name = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)

    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as f:
            yield f
        os.replace(temp_name, path)
    except BaseException:
        if os.path.exists(temp_name):
            os.remove(temp_name)
        raise

    get_reporter().log(logging.INFO, f"wrote {path}")


def write_csv(frame: pd.DataFrame, path: PathLike):
    # float_format=None keeps the shortest repr that round-trips, i.e. full precision
    with atomic_write(path) as f:
        frame.to_csv(f, index=False, lineterminator="\n")


def write_json(data, path: PathLike):
    with atomic_write(path) as f:
        f.write(json.dumps(data, indent=2, default=_to_builtin))
        f.write("\n")


def write_lines(lines: Iterable[str], path: PathLike):
    with atomic_write(path) as f:
        for line in lines:
            f.write(line)
            f.write("\n")


def _to_builtin(value):
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, Path):
        return str(value)
    raise TypeError(f"{type(value).__name__} is not JSON serializable")
