"""Exact sup of the averaged condition over window lengths.

For a piecewise-constant alpha and point events, the window average
(integral of alpha + sum of log beta) / T is a Mobius function of T
between consecutive breakpoints, so its sup over (T0, T_max] is attained
at T0, at T_max, at alpha breakpoints, or as a left or right limit at
an event.
"""

from __future__ import annotations

import bisect
import math
from collections.abc import Sequence
from dataclasses import dataclass

from ..errors import InvalidInput


@dataclass(frozen=True)
class WindowSup:
    """Binding window of the sup."""

    # Sup of the window average
    value: float

    # Binding window length
    T: float

    # Window ends just before an event at t0 + T
    left_limit: bool

    alpha_term: float
    log_beta_term: float


class _AlphaIntegral:
    """Integral of a right-continuous piecewise-constant function from t0."""

    def __init__(self, breakpoints: Sequence[tuple[float, float]], t0: float) -> None:
        if not breakpoints:
            raise InvalidInput("alpha profile is empty")
        times = [t for t, _ in breakpoints]
        if any(b <= a for a, b in zip(times, times[1:], strict=False)):
            raise InvalidInput("alpha breakpoints must be strictly increasing")
        if times[0] > t0:
            raise InvalidInput(f"alpha profile starts at {times[0]:g}, after t0={t0:g}")
        if any(not math.isfinite(v) for _, v in breakpoints):
            raise InvalidInput("alpha values must be finite")

        # Drop breakpoints before t0 except the one active at t0
        first = bisect.bisect_right(times, t0) - 1
        self.times = [t0] + times[first + 1 :]
        self.values = [v for _, v in breakpoints[first:]]
        self.cumulative = [0.0]
        for i in range(1, len(self.times)):
            width = self.times[i] - self.times[i - 1]
            self.cumulative.append(self.cumulative[-1] + self.values[i - 1] * width)

    def integral(self, t: float) -> float:
        i = bisect.bisect_right(self.times, t) - 1
        return self.cumulative[i] + self.values[i] * (t - self.times[i])


def window_sup(
    alpha_profile: Sequence[tuple[float, float]],
    log_beta_events: Sequence[tuple[float, float]],
    t0: float,
    T0: float,
    T_max: float,
) -> WindowSup:
    """Sup over T in (T0, T_max] of (1/T)[int_{t0}^{t0+T} alpha + sum_{t0 < tau <= t0+T} log beta].

    Args:
        alpha_profile: (start time, alpha) breakpoints; alpha holds until the next breakpoint.
        log_beta_events: (time, log beta) pairs.
        t0: Initial time.
        T0: Smallest window length (exclusive; its right limit is evaluated).
        T_max: Largest window length.

    Raises:
        InvalidInput: On an empty profile or if not T_max > T0 > 0.
    """
    if not (T0 > 0.0 and T_max > T0):
        raise InvalidInput(f"need T_max > T0 > 0, got T0={T0:g}, T_max={T_max:g}")
    alpha = _AlphaIntegral(alpha_profile, t0)

    t_end = t0 + T_max
    events = sorted((t, lb) for t, lb in log_beta_events if t0 < t <= t_end)
    event_times = [t for t, _ in events]
    prefix = [0.0]
    for _, lb in events:
        prefix.append(prefix[-1] + lb)

    best: WindowSup | None = None

    def consider(T: float, left_limit: bool) -> None:
        nonlocal best
        end = t0 + T
        if left_limit:
            count = bisect.bisect_left(event_times, end)
        else:
            count = bisect.bisect_right(event_times, end)
        a_term = alpha.integral(end)
        b_term = prefix[count]
        value = (a_term + b_term) / T
        if best is None or value > best.value:
            best = WindowSup(value, T, left_limit, a_term, b_term)

    consider(T0, left_limit=False)
    for t in event_times:
        T = t - t0
        if T > T0:
            consider(T, left_limit=True)
            consider(T, left_limit=False)
    for t in alpha.times:
        T = t - t0
        if T0 < T < T_max:
            consider(T, left_limit=False)
    consider(T_max, left_limit=False)

    assert best is not None
    return best
