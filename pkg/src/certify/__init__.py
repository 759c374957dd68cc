"""Contraction certificates."""

from .conditions import certify_general, certify_ltv_two_mode, certify_staircase
from .sync import solve_min_period, sync_certify
from .window import WindowSup, window_sup

__all__ = [
    "WindowSup",
    "certify_general",
    "certify_ltv_two_mode",
    "certify_staircase",
    "solve_min_period",
    "sync_certify",
    "window_sup",
]
