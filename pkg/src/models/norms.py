"""Pydantic models for vector norm specifications and measure results."""

from __future__ import annotations

import math
from enum import Enum
from typing import Annotated, Any, Literal

import numpy as np
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    PositiveInt,
    TypeAdapter,
    field_serializer,
    field_validator,
    model_validator,
)

from ..errors import ContractionError
from ..matcore import Mat, Vec, sym_eig

_INF_NAMES = {"inf", "infinity", "∞"}


class WeightedLpNorm(BaseModel):
    """Weighted Lp norm |x|_{xi,p} = (sum xi_i |x_i|^p)^(1/p), or max xi_i |x_i| for p = inf."""

    model_config = ConfigDict(frozen=True)

    type: Literal["lp"] = "lp"
    p: float = Field(
        ...,
        description='Exponent p >= 1; JSON uses "inf" for the max norm',
    )
    weights: list[float] = Field(
        ...,
        min_length=1,
        description="Strictly positive weights, one per coordinate",
    )
    label: str | None = Field(
        default=None,
        description="Optional identifier used in reports",
    )

    @field_validator("p", mode="before")
    @classmethod
    def _parse_inf(cls, value: Any) -> Any:
        if isinstance(value, str) and value.strip().lower() in _INF_NAMES:
            return math.inf
        return value

    @field_validator("p")
    @classmethod
    def _check_p(cls, value: float) -> float:
        if math.isnan(value) or value < 1.0:
            raise ValueError(f"p must be >= 1, got {value}")
        return value

    @field_validator("weights")
    @classmethod
    def _check_weights(cls, value: list[float]) -> list[float]:
        if any(not math.isfinite(w) or w <= 0.0 for w in value):
            raise ValueError("weights must be finite and strictly positive")
        return value

    @field_serializer("p")
    def _dump_p(self, p: float) -> float | int | str:
        if math.isinf(p):
            return "inf"
        return int(p) if float(p).is_integer() else p

    @classmethod
    def unweighted(cls, p: float, n: int, label: str | None = None) -> WeightedLpNorm:
        """Create the plain Lp norm on R^n."""
        return cls(p=p, weights=[1.0] * n, label=label)

    @property
    def dim(self) -> int:
        return len(self.weights)

    @property
    def xi(self) -> Vec:
        return np.asarray(self.weights, dtype=np.float64)

    @property
    def is_max_norm(self) -> bool:
        return math.isinf(self.p)

    @property
    def is_euclidean(self) -> bool:
        return self.p == 2.0 and all(w == 1.0 for w in self.weights)


class QuadraticNorm(BaseModel):
    """Quadratic norm |x|_P = sqrt(x^T P x); a factor Theta is stored as P = Theta^T Theta."""

    model_config = ConfigDict(frozen=True)

    type: Literal["quadratic"] = "quadratic"
    P: list[list[float]] = Field(
        ...,
        description="Symmetric positive definite weight matrix",
    )
    label: str | None = Field(default=None, description="Optional identifier used in reports")

    @model_validator(mode="before")
    @classmethod
    def _canonicalize_theta(cls, data: Any) -> Any:
        if not isinstance(data, dict) or "Theta" not in data:
            return data
        if data.get("P") is not None:
            raise ValueError("give either P or Theta, not both")
        theta = np.asarray(data["Theta"], dtype=np.float64)
        if theta.ndim != 2:
            raise ValueError("Theta must be a matrix")
        out = {k: v for k, v in data.items() if k != "Theta"}
        out["P"] = (theta.T @ theta).tolist()
        return out

    @field_validator("P")
    @classmethod
    def _check_spd(cls, value: list[list[float]]) -> list[list[float]]:
        p = np.asarray(value, dtype=np.float64)
        if p.ndim != 2 or p.shape[0] != p.shape[1] or p.size == 0:
            raise ValueError("P must be a non-empty square matrix")
        try:
            eigenvalues, _ = sym_eig(p)
        except ContractionError as e:
            raise ValueError(str(e)) from e
        if eigenvalues[0] <= 1e-12:
            raise ValueError(f"P is not positive definite (smallest eigenvalue {eigenvalues[0]:.3e})")
        return (0.5 * (p + p.T)).tolist()

    @classmethod
    def from_theta(cls, theta: Any, label: str | None = None) -> QuadraticNorm:
        """Create the norm |Theta x|_2."""
        return cls.model_validate({"Theta": np.asarray(theta, dtype=np.float64).tolist(), "label": label})

    @classmethod
    def identity(cls, n: int, label: str | None = None) -> QuadraticNorm:
        return cls(P=np.eye(n).tolist(), label=label)

    @property
    def dim(self) -> int:
        return len(self.P)

    @property
    def matrix(self) -> Mat:
        return np.asarray(self.P, dtype=np.float64)

    @property
    def is_diagonal(self) -> bool:
        p = self.matrix
        return bool(np.all(p == np.diag(np.diag(p))))


InnerNormSpec = Annotated[WeightedLpNorm | QuadraticNorm, Field(discriminator="type")]


class StructuredNorm(BaseModel):
    """Structured norm: outer norm of the vector of inner block norms."""

    model_config = ConfigDict(frozen=True)

    type: Literal["structured"] = "structured"
    partition: list[PositiveInt] = Field(..., min_length=1, description="Block sizes n_k")
    inner: list[InnerNormSpec] = Field(..., description="One inner norm per block")
    outer: InnerNormSpec = Field(..., description="Monotone norm on R^K")
    label: str | None = Field(default=None, description="Optional identifier used in reports")

    @model_validator(mode="after")
    def _check_blocks(self) -> StructuredNorm:
        if len(self.inner) != len(self.partition):
            raise ValueError(
                f"{len(self.partition)} blocks but {len(self.inner)} inner norms"
            )
        for k, (size, spec) in enumerate(zip(self.partition, self.inner, strict=True)):
            if spec.dim != size:
                raise ValueError(f"inner norm {k} has dimension {spec.dim}, block has {size}")
        if self.outer.dim != len(self.partition):
            raise ValueError(
                f"outer norm has dimension {self.outer.dim}, expected {len(self.partition)}"
            )
        if isinstance(self.outer, QuadraticNorm) and not self.outer.is_diagonal:
            # Only monotone outer norms give a valid structured norm
            raise ValueError("outer quadratic norm must be diagonal")
        return self

    @property
    def dim(self) -> int:
        return sum(self.partition)

    @property
    def blocks(self) -> list[slice]:
        """Coordinate slices of each block."""
        out: list[slice] = []
        start = 0
        for size in self.partition:
            out.append(slice(start, start + size))
            start += size
        return out


NormSpec = Annotated[
    WeightedLpNorm | QuadraticNorm | StructuredNorm,
    Field(discriminator="type"),
]

type AnyNormSpec = WeightedLpNorm | QuadraticNorm | StructuredNorm

NORM_SPEC_ADAPTER: TypeAdapter[AnyNormSpec] = TypeAdapter(NormSpec)


def parse_norm_spec(data: Any) -> AnyNormSpec:
    """Validate a JSON-like object into a norm specification."""
    return NORM_SPEC_ADAPTER.validate_python(data)


def describe_norm(spec: AnyNormSpec) -> str:
    """Short identifier: the label when present, else a structural description."""
    if spec.label:
        return spec.label
    match spec:
        case WeightedLpNorm():
            p = "inf" if spec.is_max_norm else f"{spec.p:g}"
            return f"lp{p}[{spec.dim}]"
        case QuadraticNorm():
            return f"quadratic[{spec.dim}]"
        case StructuredNorm():
            return "structured[" + "+".join(str(n) for n in spec.partition) + "]"


class MeasureMethod(str, Enum):
    """How a matrix measure value was obtained."""

    CLOSED_FORM = "closed-form"
    LIMIT_ORACLE = "limit-oracle"
    HIERARCHICAL_BOUND = "hierarchical-bound"


class MeasureResult(BaseModel):
    """Matrix measure of a matrix under a norm."""

    value: float = Field(..., allow_inf_nan=False, description="Measure value (1/seconds)")
    method: MeasureMethod = Field(..., description="Closed form, limit oracle or hierarchical bound")
    norm: str | None = Field(default=None, description="Identifier of the norm used")


class CrossNormResult(BaseModel):
    """Induced norm of a rectangular block between two norms."""

    value: float = Field(..., ge=0.0, allow_inf_nan=False)
    exact: bool = Field(..., description="False when the value is a chained upper bound")
    method: str = Field(default="", description="Rule that produced the value")
