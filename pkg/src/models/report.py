"""Pydantic models for the reproduction report."""

from __future__ import annotations

import math
from enum import Enum

from pydantic import BaseModel, Field, model_validator


class ReproStatus(str, Enum):
    MATCH = "match"
    MISMATCH = "mismatch"
    INFORMATIONAL = "informational"


class ReproRow(BaseModel):
    """One published number next to its recomputed value."""

    claim: str = Field(..., description="Claim identifier, e.g. ex1.mu1")
    published: float | None = Field(default=None, description="Published value")
    computed: float = Field(..., description="Recomputed value")
    tolerance: float | None = Field(default=None, ge=0.0)
    status: ReproStatus
    note: str = ""

    @model_validator(mode="after")
    def _check_status(self) -> ReproRow:
        if self.status == ReproStatus.INFORMATIONAL:
            return self
        if self.published is None or self.tolerance is None:
            raise ValueError(f"{self.claim}: compared rows need a published value and a tolerance")
        expected = (
            ReproStatus.MATCH
            if math.isfinite(self.computed) and abs(self.published - self.computed) <= self.tolerance
            else ReproStatus.MISMATCH
        )
        if self.status != expected:
            raise ValueError(f"{self.claim}: status {self.status.value} but values say {expected.value}")
        return self

    @classmethod
    def compare(
        cls, claim: str, published: float, computed: float, tolerance: float, note: str = ""
    ) -> ReproRow:
        matched = math.isfinite(computed) and abs(published - computed) <= tolerance
        return cls(
            claim=claim,
            published=published,
            computed=computed,
            tolerance=tolerance,
            status=ReproStatus.MATCH if matched else ReproStatus.MISMATCH,
            note=note,
        )

    @classmethod
    def info(cls, claim: str, computed: float, published: float | None = None, note: str = "") -> ReproRow:
        return cls(
            claim=claim,
            published=published,
            computed=computed,
            status=ReproStatus.INFORMATIONAL,
            note=note,
        )


class ReproReport(BaseModel):
    rows: list[ReproRow] = Field(default_factory=list)

    @property
    def mismatches(self) -> list[ReproRow]:
        return [row for row in self.rows if row.status == ReproStatus.MISMATCH]
