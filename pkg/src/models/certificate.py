"""Pydantic models for contraction certificates."""

from __future__ import annotations

import re
from collections.abc import Mapping
from enum import Enum
from typing import Any

from pydantic import BaseModel, Field, field_validator

from ..errors import InvalidInput, MissingBound
from .transaction import BetaKind, BetaResult

_PAIR_KEY = re.compile(r"^\s*(-?\d+)\s*->\s*(-?\d+)\s*$")


def pair_key(k: int, l: int) -> str:
    """Canonical "k->l" key for an ordered mode pair."""
    return f"{k}->{l}"


def parse_pair_key(key: str) -> tuple[int, int]:
    match = _PAIR_KEY.match(key)
    if match is None:
        raise ValueError(f"transition key must look like '1->2', got {key!r}")
    return int(match.group(1)), int(match.group(2))


class CertificateKind(str, Enum):
    """Which condition produced a certificate."""

    GENERAL = "general"
    STAIRCASE = "staircase"
    PERIODIC = "periodic"
    LTV2 = "ltv2"
    SYNC = "sync"


class ModeBounds(BaseModel):
    """Per-mode measure bounds alpha_k and per-switch transaction coefficients beta_kl."""

    alpha: dict[int, float] = Field(..., description="Measure bound per mode (1/seconds)")
    beta: dict[str, float] = Field(
        default_factory=dict,
        description='Coefficient applied at k->l switches, keyed "k->l"',
    )
    norm_labels: dict[int, str] = Field(
        default_factory=dict,
        description="Norm used by each mode; same-norm switches default to beta = 1",
    )
    sources: dict[str, str] = Field(
        default_factory=dict,
        description="Provenance of each beta (kind, method, variant)",
    )

    @field_validator("beta", mode="before")
    @classmethod
    def _normalize_keys(cls, value: Any) -> Any:
        if not isinstance(value, Mapping):
            return value
        out: dict[str, Any] = {}
        for key, beta in value.items():
            if isinstance(key, tuple):
                k, l = key
            else:
                k, l = parse_pair_key(str(key))
            out[pair_key(int(k), int(l))] = beta
        return out

    @classmethod
    def from_results(
        cls,
        alpha: Mapping[int, float],
        betas: Mapping[tuple[int, int], BetaResult],
        norm_labels: Mapping[int, str] | None = None,
    ) -> ModeBounds:
        """Build bounds from computed coefficients, rejecting sampled lower bounds.

        Raises:
            InvalidInput: If any coefficient is a sampled lower bound or not positive.
        """
        beta: dict[str, float] = {}
        sources: dict[str, str] = {}
        for (k, l), result in betas.items():
            if result.kind == BetaKind.SAMPLED_LOWER:
                raise InvalidInput(
                    f"beta for {k}->{l} is a sampled lower bound and cannot certify"
                )
            if result.value <= 0.0:
                raise InvalidInput(f"beta for {k}->{l} must be positive, got {result.value}")
            key = pair_key(k, l)
            beta[key] = result.value
            source = f"{result.kind.value}:{result.method}"
            if result.variant is not None:
                source += f":{result.variant.value}"
            sources[key] = source
        return cls(
            alpha=dict(alpha),
            beta=beta,
            norm_labels=dict(norm_labels or {}),
            sources=sources,
        )

    def alpha_for(self, mode: int) -> float:
        try:
            return self.alpha[mode]
        except KeyError:
            raise MissingBound(mode) from None

    def beta_for(self, k: int, l: int) -> float:
        """Coefficient for a k->l switch.

        Raises:
            MissingBound: If absent and the two modes do not share a norm.
            InvalidInput: If the stored value is not positive.
        """
        key = pair_key(k, l)
        if key in self.beta:
            value = self.beta[key]
            if value <= 0.0:
                raise InvalidInput(f"beta for {key} must be positive, got {value}")
            return value
        label = self.norm_labels.get(k)
        if label is not None and label == self.norm_labels.get(l):
            return 1.0
        raise MissingBound((k, l))


class WindowBreakdown(BaseModel):
    """Terms of the averaged condition for one window (t0, t0 + T]."""

    T: float = Field(..., gt=0.0, description="Window length in seconds")
    alpha_term: float = Field(..., description="Integral of alpha, i.e. sum alpha_k T_k")
    log_beta_term: float = Field(..., description="Sum of log beta over switches in the window")
    left_limit: bool = Field(
        default=False,
        description="Window ends just before a switch (switch at the end excluded)",
    )
    durations: dict[int, float] | None = Field(default=None, description="T_k per mode")
    transitions: dict[str, int] | None = Field(default=None, description='N_kl keyed "k->l"')

    @property
    def average(self) -> float:
        """(alpha_term + log_beta_term) / T; the certificate rate is minus its sup."""
        return (self.alpha_term + self.log_beta_term) / self.T


class Certificate(BaseModel):
    """Outcome of a contraction-condition evaluation."""

    kind: CertificateKind = Field(..., description="Condition that was evaluated")
    c: float = Field(..., allow_inf_nan=False, description="Guaranteed rate; positive means contracting")
    c_min: float = Field(default=0.0, description="Requested minimum rate")
    satisfied: bool = Field(..., description="c > c_min")
    window: tuple[float, float] | None = Field(default=None, description="(T0, T_max) searched")
    breakdown: WindowBreakdown | None = Field(default=None, description="Binding window terms")
    asymptotic_rate: float | None = Field(
        default=None,
        description="Single-period rate for periodic schedules",
    )
    period_breakdown: WindowBreakdown | None = Field(default=None, description="Terms of one period")
    rates: dict[str, float] = Field(default_factory=dict, description="Alternative rate evaluations")
    flags: list[str] = Field(default_factory=list, description="Disagreements and mismatch notes")
    notes: list[str] = Field(default_factory=list, description="Provenance of the inputs")

    @classmethod
    def from_rate(cls, kind: CertificateKind, c: float, c_min: float = 0.0, **kwargs: Any) -> Certificate:
        return cls(kind=kind, c=c, c_min=c_min, satisfied=c > c_min, **kwargs)
