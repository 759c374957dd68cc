"""Pydantic model for Chua circuit parameters."""

from pydantic import BaseModel, ConfigDict, Field


class ChuaParams(BaseModel):
    """Parameters of the dimensionless Chua circuit (double-scroll defaults)."""

    model_config = ConfigDict(frozen=True)

    m0: float = Field(default=-0.5, allow_inf_nan=False, description="Outer slope of g")
    m1: float = Field(default=-0.8, allow_inf_nan=False, description="Inner slope of g")
    G: float = Field(default=0.7, allow_inf_nan=False)
    p: float = Field(default=9.0, allow_inf_nan=False)
    q: float = Field(default=7.0, allow_inf_nan=False)
