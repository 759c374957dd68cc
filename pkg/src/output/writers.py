"""Deterministic JSON and CSV emission."""

from __future__ import annotations

import csv
import io
import json
import logging
import math
from collections.abc import Mapping, Sequence
from enum import Enum
from pathlib import Path
from typing import Any

import aiofiles
import numpy as np
from pydantic import BaseModel

from ..simulation import Trajectory

logger = logging.getLogger(__name__)

DEFAULT_DIGITS = 12


def format_float(value: float, digits: int = DEFAULT_DIGITS) -> float | str:
    """Round to significant digits; non-finite values become strings."""
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return float(f"{value:.{digits}g}")


def _key(key: Any) -> str:
    return str(key.value) if isinstance(key, Enum) else str(key)


def normalize(obj: Any, digits: int = DEFAULT_DIGITS) -> Any:
    """Recursively convert models, arrays and floats into stable JSON values."""
    match obj:
        case BaseModel():
            return normalize(obj.model_dump(mode="python"), digits)
        case Enum():
            return normalize(obj.value, digits)
        case bool() | None | str():
            return obj
        case float() | np.floating():
            return format_float(float(obj), digits)
        case int() | np.integer():
            return int(obj)
        case np.ndarray():
            return normalize(obj.tolist(), digits)
        case Mapping():
            return {_key(k): normalize(v, digits) for k, v in obj.items()}
        case Sequence():
            return [normalize(v, digits) for v in obj]
        case _:
            raise TypeError(f"cannot serialise {type(obj).__name__}")


def to_json_text(obj: Any, digits: int = DEFAULT_DIGITS) -> str:
    return json.dumps(normalize(obj, digits), ensure_ascii=False, indent=2) + "\n"


def trajectory_csv(trajectory: Trajectory, digits: int = DEFAULT_DIGITS) -> str:
    """CSV with header t,mode,x1..xn, one row per sample."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["t", "mode", *(f"x{i + 1}" for i in range(trajectory.dim))])
    for t, mode, state in zip(trajectory.times, trajectory.modes, trajectory.states, strict=True):
        writer.writerow([f"{t:.{digits}g}", int(mode), *(f"{v:.{digits}g}" for v in state)])
    return buffer.getvalue()


async def write_text(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    async with aiofiles.open(path, "w", encoding="utf-8") as f:
        await f.write(text)
    logger.info("Wrote %s", path)


async def read_text(path: Path) -> str:
    if not path.exists():
        raise FileNotFoundError(f"File not found: {path}")
    async with aiofiles.open(path, encoding="utf-8") as f:
        return await f.read()
