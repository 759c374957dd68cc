"""Norm evaluation, induced matrix norms and matrix measures."""

from .base import NormHandler, NormRegistry, create_default_registry
from .measure import (
    cross_block_norm,
    default_registry,
    induced_matrix_norm,
    matrix_measure,
    measure_limit_oracle,
    norm_eval,
    norm_eval_batch,
    structured_reduced,
    tv_quadratic_measure,
)

__all__ = [
    # Registry
    "NormHandler",
    "NormRegistry",
    "create_default_registry",
    "default_registry",
    # Operations
    "cross_block_norm",
    "induced_matrix_norm",
    "matrix_measure",
    "measure_limit_oracle",
    "norm_eval",
    "norm_eval_batch",
    "structured_reduced",
    "tv_quadratic_measure",
]
