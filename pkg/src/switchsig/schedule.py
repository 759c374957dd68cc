"""Evaluation of staircase switching signals.

Switch instants are always computed as t0 + k * period + offset, from
offsets recomputed out of the dwell list, so every query sees the same
boundary values and nothing accumulates drift. Switches are attributed
to half-open windows (s, t].
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterator

from ..errors import InvalidInput, OutOfDomain
from ..models.signal import DwellStats, SwitchingSignal

logger = logging.getLogger(__name__)


def _segment_starts(signal: SwitchingSignal, start: float) -> Iterator[tuple[float, int]]:
    """Yield (time, mode) of raw segment starts from at or before ``start`` onwards."""
    offsets = signal.offsets
    if not signal.periodic:
        for i, (mode, _) in enumerate(signal.segments):
            yield signal.t0 + offsets[i], mode
        return

    period = offsets[-1]
    k = max(int(math.floor((start - signal.t0) / period)) - 1, 0)
    while True:
        base = signal.t0 + k * period
        for i, (mode, _) in enumerate(signal.segments):
            yield base + offsets[i], mode
        k += 1


def _check_time(signal: SwitchingSignal, t: float) -> None:
    if not math.isfinite(t):
        raise OutOfDomain(t, "time must be finite")
    if t < signal.t0:
        raise OutOfDomain(t, f"signal starts at t0={signal.t0:g}")
    if t > signal.end:
        raise OutOfDomain(t, f"finite signal ends at {signal.end:g}")


def value_at(signal: SwitchingSignal, t: float) -> int:
    """Active mode at time t, right-continuous at switch instants.

    Raises:
        OutOfDomain: If t precedes t0 or lies past a finite schedule.
    """
    _check_time(signal, t)
    mode = signal.segments[0][0]
    for start, seg_mode in _segment_starts(signal, t):
        if start > t:
            break
        mode = seg_mode
    return mode


def iter_pieces(signal: SwitchingSignal, s: float, t: float) -> Iterator[tuple[float, float, int]]:
    """Yield maximal constant-mode intervals (a, b, mode) covering [s, t].

    Interior boundaries are exactly the switch instants in (s, t).
    """
    _check_time(signal, s)
    _check_time(signal, t)
    current_start = s
    current_mode: int | None = None
    for start, mode in _segment_starts(signal, s):
        if start >= t:
            break
        if start <= s:
            current_mode = mode
            continue
        if mode != current_mode:
            yield current_start, start, current_mode
            current_start, current_mode = start, mode
    assert current_mode is not None
    yield current_start, t, current_mode


def switch_instants(
    signal: SwitchingSignal,
    s: float,
    t: float,
    *,
    include_end: bool = True,
) -> list[tuple[float, int, int]]:
    """Switches (time, from mode, to mode) with s < time <= t (or < t)."""
    _check_time(signal, s)
    _check_time(signal, t)
    out: list[tuple[float, int, int]] = []
    previous: int | None = None
    for start, mode in _segment_starts(signal, s):
        if start > t or (start == t and not include_end):
            break
        if previous is not None and mode != previous and start > s:
            out.append((start, previous, mode))
        previous = mode
    return out


def dwell_stats(
    signal: SwitchingSignal,
    s: float,
    t: float,
    *,
    include_end: bool = True,
) -> DwellStats:
    """Time spent in each mode and k->l switch counts over (s, t].

    Args:
        signal: Switching signal.
        s: Window start (switches exactly at s are excluded).
        t: Window end (switches exactly at t are included unless include_end is False).
        include_end: Set False to evaluate the left limit at t.

    Raises:
        InvalidInput: If t <= s.
        OutOfDomain: If the window leaves the signal's coverage.
    """
    if not t > s:
        raise InvalidInput(f"window end {t:g} must exceed start {s:g}")

    durations: dict[int, float] = {}
    for a, b, mode in iter_pieces(signal, s, t):
        durations[mode] = durations.get(mode, 0.0) + (b - a)

    transitions: dict[tuple[int, int], int] = {}
    for _, k, l in switch_instants(signal, s, t, include_end=include_end):
        transitions[(k, l)] = transitions.get((k, l), 0) + 1

    return DwellStats(durations=durations, transitions=transitions)
