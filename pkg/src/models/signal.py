"""Pydantic models for staircase switching signals."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from pydantic import BaseModel, ConfigDict, Field, field_validator


class SwitchingSignal(BaseModel):
    """Staircase mode schedule r(t): a list of (mode, dwell) segments starting at t0.

    Consecutive segments with the same mode are merged on construction.
    A periodic signal repeats its segment list forever; a finite one covers
    [t0, t0 + total dwell].
    """

    model_config = ConfigDict(frozen=True)

    segments: list[tuple[int, float]] = Field(
        ...,
        min_length=1,
        description="Ordered (mode id, dwell seconds) pairs",
    )
    periodic: bool = Field(default=False, description="Repeat the segment list forever")
    t0: float = Field(default=0.0, allow_inf_nan=False, description="Start time in seconds")

    @field_validator("segments")
    @classmethod
    def _merge_segments(cls, value: list[tuple[int, float]]) -> list[tuple[int, float]]:
        merged: list[tuple[int, float]] = []
        for mode, dwell in value:
            if not math.isfinite(dwell) or dwell <= 0.0:
                raise ValueError(f"dwell for mode {mode} must be positive and finite, got {dwell}")
            if merged and merged[-1][0] == mode:
                merged[-1] = (mode, merged[-1][1] + dwell)
            else:
                merged.append((mode, dwell))
        return merged

    @classmethod
    def constant(cls, mode: int, t0: float = 0.0) -> SwitchingSignal:
        """Signal that stays in one mode forever."""
        return cls(segments=[(mode, 1.0)], periodic=True, t0=t0)

    @property
    def period(self) -> float:
        """Total dwell of one pass through the segment list."""
        return math.fsum(dwell for _, dwell in self.segments)

    @property
    def end(self) -> float:
        """Last covered instant (infinite for periodic signals)."""
        return math.inf if self.periodic else self.t0 + self.period

    @property
    def modes(self) -> list[int]:
        return sorted({mode for mode, _ in self.segments})

    @property
    def offsets(self) -> list[float]:
        """Segment start offsets within one pass, recomputed from the dwells."""
        out = [0.0]
        for _, dwell in self.segments:
            out.append(out[-1] + dwell)
        return out


@dataclass(frozen=True)
class DwellStats:
    """Occupation times and switch counts of a signal over a window (s, t]."""

    # Total seconds spent in each mode
    durations: dict[int, float] = field(default_factory=dict)

    # Number of k -> l switches
    transitions: dict[tuple[int, int], int] = field(default_factory=dict)

    @property
    def total_switches(self) -> int:
        return sum(self.transitions.values())

    @property
    def length(self) -> float:
        return math.fsum(self.durations.values())

    def count(self, k: int, l: int) -> int:
        return self.transitions.get((k, l), 0)

    def to_dict(self) -> dict[str, object]:
        """JSON-friendly view with "k->l" transition keys."""
        return {
            "durations": {str(k): v for k, v in sorted(self.durations.items())},
            "transitions": {f"{k}->{l}": n for (k, l), n in sorted(self.transitions.items())},
            "total_switches": self.total_switches,
        }
