"""Writers for certificates, reports and trajectories."""

from .writers import (
    DEFAULT_DIGITS,
    format_float,
    normalize,
    read_text,
    to_json_text,
    trajectory_csv,
    write_text,
)

__all__ = [
    "DEFAULT_DIGITS",
    "format_float",
    "normalize",
    "read_text",
    "to_json_text",
    "trajectory_csv",
    "write_text",
]
