"""Pydantic models for transaction coefficients between norms."""

from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, Field


class BetaKind(str, Enum):
    """How trustworthy a transaction coefficient is."""

    EXACT = "exact"
    PAPER_BOUND = "paper-bound"
    SAMPLED_LOWER = "sampled-lower"


class Prop4Variant(str, Enum):
    """Factor used by the weighted-Lp direction (2) bound."""

    CORRECTED = "corrected"
    LITERAL = "literal"


class BetaResult(BaseModel):
    """Coefficient beta with |x|_to <= beta |x|_from (sup of |x|_to on the |.|_from unit sphere)."""

    value: float = Field(
        ...,
        ge=0.0,
        allow_inf_nan=False,
        description="Coefficient value (certificates additionally require > 0)",
    )
    kind: BetaKind = Field(..., description="exact, paper-bound or sampled-lower")
    direction: tuple[str, str] = Field(..., description="(from-norm id, to-norm id)")
    method: str = Field(default="", description="Rule or bound that produced the value")
    variant: Prop4Variant | None = Field(
        default=None,
        description="Weighted-Lp bound factor variant when applicable",
    )

    @property
    def is_certified(self) -> bool:
        """Whether the value may feed a certificate."""
        return self.kind != BetaKind.SAMPLED_LOWER and self.value > 0.0
