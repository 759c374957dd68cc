"""Pydantic models for run configurations (one JSON document per run)."""

from __future__ import annotations

import json
from typing import Annotated, Any, Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from ..errors import ConfigError
from .norms import NormSpec
from .chua import ChuaParams
from .signal import SwitchingSignal
from .transaction import Prop4Variant


class LinearModeConfig(BaseModel):
    """Affine mode x' = A x + B."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["linear"] = "linear"
    A: list[list[float]] = Field(..., min_length=1, description="Square system matrix")
    B: list[float] | None = Field(default=None, description="Constant forcing (zero when omitted)")

    @model_validator(mode="after")
    def _check_shapes(self) -> LinearModeConfig:
        n = len(self.A)
        if any(len(row) != n for row in self.A):
            raise ValueError(f"A must be square, got {n} rows of lengths {[len(r) for r in self.A]}")
        if self.B is not None and len(self.B) != n:
            raise ValueError(f"B has length {len(self.B)}, A is {n}x{n}")
        return self

    @property
    def dim(self) -> int:
        return len(self.A)

    @property
    def matrix(self) -> np.ndarray:
        return np.asarray(self.A, dtype=np.float64)


class ChuaModeConfig(BaseModel):
    """Single Chua node used as a nonlinear mode."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["chua"] = "chua"
    params: ChuaParams = Field(default_factory=ChuaParams)

    @property
    def dim(self) -> int:
        return 3


ModeConfig = Annotated[LinearModeConfig | ChuaModeConfig, Field(discriminator="kind")]


class MeasureOptions(BaseModel):
    """Matrix measure of one mode under its scheduled norm."""

    mode: int = Field(..., description="Mode whose matrix (or Jacobian values) is measured")
    norm: str | None = Field(default=None, description="Norm name; defaults to the scheduled one")
    oracle_h: float | None = Field(default=None, description="Also run the limit oracle with this step")


class BetaOptions(BaseModel):
    source: str = Field(..., description="Norm the state is measured in before the switch")
    target: str = Field(..., description="Norm after the switch")
    variant: Prop4Variant = Prop4Variant.CORRECTED
    samples: int = Field(default=0, ge=0, description="Sampled lower bound as a cross-check")


class GeneralProfile(BaseModel):
    """Explicit alpha(t) breakpoints and log-beta events."""

    alpha: list[tuple[float, float]] = Field(..., min_length=1, description="(start time, alpha)")
    log_beta_events: list[tuple[float, float]] = Field(default_factory=list)


class CertifyOptions(BaseModel):
    method: Literal["staircase", "ltv2", "general"] = "staircase"
    alpha: dict[int, float] = Field(
        default_factory=dict,
        description="Measure bounds overriding the computed ones",
    )
    beta: dict[str, float] = Field(
        default_factory=dict,
        description='Coefficients keyed "k->l" overriding the computed ones',
    )
    c_min: float = 0.0
    t0: float | None = None
    T0: float | None = None
    T_max: float | None = None
    phi_r: float | None = Field(default=None, gt=0.0, description="Switching frequency for ltv2")
    dwell: float | None = Field(default=None, gt=0.0, description="Dwell override for ltv2")
    profile: GeneralProfile | None = None

    @model_validator(mode="after")
    def _check_method(self) -> CertifyOptions:
        if self.method == "ltv2" and self.phi_r is None:
            raise ValueError("ltv2 needs phi_r")
        if self.method == "general":
            if self.profile is None:
                raise ValueError("general needs a profile")
            if self.T0 is None or self.T_max is None:
                raise ValueError("general needs T0 and T_max")
        return self


class SimulateOptions(BaseModel):
    x0: list[float] = Field(..., min_length=1)
    y0: list[float] | None = Field(default=None, description="Second initial state for pair divergence")
    t0: float = 0.0
    tf: float = Field(..., description="Final time in seconds")
    dt: float | None = Field(default=None, gt=0.0, description="Step; falls back to the CLI setting")

    @model_validator(mode="after")
    def _check(self) -> SimulateOptions:
        if self.tf <= self.t0:
            raise ValueError(f"tf={self.tf} must exceed t0={self.t0}")
        if self.y0 is not None and len(self.y0) != len(self.x0):
            raise ValueError("x0 and y0 have different lengths")
        return self


class NetworkOptions(BaseModel):
    """Chua blinking network whose sync constants are recomputed."""

    graph: str = Field(default="shipped", description='Graph JSON path, or "shipped"')
    chua: ChuaParams = Field(default_factory=ChuaParams)
    k: float = Field(default=1.0, ge=0.0)
    weights: list[float] = Field(default=[1.0, 3.4042, 1.0369], min_length=3, max_length=3)


class SyncOptions(BaseModel):
    mu0: float | None = None
    mu1: float | None = None
    beta01: float | None = Field(default=None, gt=0.0)
    beta10: float | None = Field(default=None, gt=0.0)
    coupling_verified: bool = False
    network: NetworkOptions | None = None
    duty_off: float = Field(default=0.25, ge=0.0, lt=1.0)
    period: float | None = Field(default=None, gt=0.0, description="Defaults to twice the threshold")
    c_min: float = 0.0

    @model_validator(mode="after")
    def _check_source(self) -> SyncOptions:
        explicit = [self.mu0, self.mu1, self.beta01, self.beta10]
        if self.network is None and any(v is None for v in explicit):
            raise ValueError("give mu0, mu1, beta01 and beta10, or a network section")
        return self


class RunConfig(BaseModel):
    """Everything one CLI command needs."""

    model_config = ConfigDict(extra="forbid")

    modes: dict[int, ModeConfig] = Field(default_factory=dict)
    norms: dict[str, NormSpec] = Field(default_factory=dict)
    norm_schedule: dict[int, str] = Field(
        default_factory=dict,
        description="Norm name used while each mode is active",
    )
    signal: SwitchingSignal | None = None
    measure: MeasureOptions | None = None
    beta: BetaOptions | None = None
    certify: CertifyOptions | None = None
    simulate: SimulateOptions | None = None
    sync: SyncOptions | None = None

    def check_references(self) -> None:
        """Cross-field checks; raises ConfigError naming the offending path."""
        dims = {m.dim for m in self.modes.values()}
        if len(dims) > 1:
            raise ConfigError("modes", f"modes have different dimensions {sorted(dims)}")
        dim = dims.pop() if dims else None

        for mode, name in self.norm_schedule.items():
            if name not in self.norms:
                raise ConfigError(f"norm_schedule.{mode}", f"unknown norm {name!r}")
            if self.modes and mode not in self.modes:
                raise ConfigError(f"norm_schedule.{mode}", f"unknown mode {mode}")
        if dim is not None:
            for name, spec in self.norms.items():
                if spec.dim != dim:
                    raise ConfigError(f"norms.{name}", f"dimension {spec.dim}, modes have {dim}")

        if self.signal is not None and self.modes:
            for index, (mode, _) in enumerate(self.signal.segments):
                if mode not in self.modes:
                    raise ConfigError(f"signal.segments.{index}", f"unknown mode {mode}")

        if self.measure is not None:
            if self.measure.mode not in self.modes:
                raise ConfigError("measure.mode", f"unknown mode {self.measure.mode}")
            name = self.measure.norm or self.norm_schedule.get(self.measure.mode)
            if name is None or name not in self.norms:
                raise ConfigError("measure.norm", f"no norm for mode {self.measure.mode}")
        if self.beta is not None:
            for field in ("source", "target"):
                name = getattr(self.beta, field)
                if name not in self.norms:
                    raise ConfigError(f"beta.{field}", f"unknown norm {name!r}")
        if self.certify is not None and self.certify.method == "staircase" and self.signal is None:
            raise ConfigError("signal", "staircase certification needs a switching signal")
        if self.simulate is not None:
            if not self.modes:
                raise ConfigError("modes", "simulate needs at least one mode")
            if self.signal is None:
                raise ConfigError("signal", "simulate needs a switching signal")
            if dim is not None and len(self.simulate.x0) != dim:
                raise ConfigError("simulate.x0", f"length {len(self.simulate.x0)}, modes have {dim}")
            if self.simulate.y0 is not None:
                for mode in self.signal.modes:
                    if mode not in self.norm_schedule:
                        raise ConfigError("norm_schedule", f"pair divergence needs a norm for mode {mode}")


def _error_path(e: ValidationError) -> tuple[str, str]:
    first = e.errors()[0]
    path = ".".join(str(part) for part in first["loc"])
    return path, first["msg"]


def parse_config(data: Any) -> RunConfig:
    """Validate a decoded JSON document into a RunConfig.

    Raises:
        ConfigError: With the JSON path of the first problem found.
    """
    try:
        config = RunConfig.model_validate(data)
    except ValidationError as e:
        path, message = _error_path(e)
        raise ConfigError(path, message) from e
    config.check_references()
    return config


def parse_config_text(text: str) -> RunConfig:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError("", f"not valid JSON: {e}") from e
    return parse_config(data)


def dump_config(config: RunConfig) -> dict[str, Any]:
    """JSON-ready form that parses back to an equal config."""
    return config.model_dump(mode="json", exclude_none=True)
