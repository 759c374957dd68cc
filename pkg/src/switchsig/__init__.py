"""Switching-signal evaluation and dwell statistics."""

from .schedule import dwell_stats, iter_pieces, switch_instants, value_at

__all__ = ["dwell_stats", "iter_pieces", "switch_instants", "value_at"]
