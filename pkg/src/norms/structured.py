"""Structured (hierarchical) norms |x|_G = |(|x^1|_{s_1}, ..., |x^K|_{s_K})|_S."""

from __future__ import annotations

import numpy as np

from ..matcore import Mat
from ..models.norms import AnyNormSpec, MeasureMethod, MeasureResult, StructuredNorm, describe_norm
from .base import NormHandler, NormRegistry


class StructuredHandler(NormHandler):
    """Handler for structured norms.

    Induced norms and measures are the hierarchical bounds obtained from
    the reduced K x K matrix, not exact values.
    """

    name = "structured"
    priority = 20
    spec_types = (StructuredNorm,)

    def __init__(self, registry: NormRegistry) -> None:
        """Initialize the handler.

        Args:
            registry: Registry used to dispatch the inner and outer norms.
        """
        self.registry = registry

    def evaluate(self, spec: AnyNormSpec, x: np.ndarray) -> np.ndarray:
        assert isinstance(spec, StructuredNorm)
        block_norms = [
            self.registry.get_handler(inner).evaluate(inner, x[..., block])
            for inner, block in zip(spec.inner, spec.blocks, strict=True)
        ]
        stacked = np.stack(block_norms, axis=-1)
        return self.registry.get_handler(spec.outer).evaluate(spec.outer, stacked)

    def reduce(self, spec: StructuredNorm, a: Mat, *, diagonal_measure: bool) -> Mat:
        """Reduced matrix of block norms; diagonal entries are measures or norms."""
        # Import here to avoid circular imports
        from .measure import cross_block_norm

        blocks = spec.blocks
        size = len(blocks)
        reduced = np.zeros((size, size))
        for i, (row_block, row_spec) in enumerate(zip(blocks, spec.inner, strict=True)):
            for j, (col_block, col_spec) in enumerate(zip(blocks, spec.inner, strict=True)):
                sub = a[row_block, col_block]
                if i == j and diagonal_measure:
                    reduced[i, j] = self.registry.get_handler(row_spec).measure(row_spec, sub).value
                else:
                    reduced[i, j] = cross_block_norm(col_spec, row_spec, sub).value
        return reduced

    def induced_norm(self, spec: AnyNormSpec, a: Mat) -> float:
        assert isinstance(spec, StructuredNorm)
        reduced = self.reduce(spec, a, diagonal_measure=False)
        return self.registry.get_handler(spec.outer).induced_norm(spec.outer, reduced)

    def measure(self, spec: AnyNormSpec, a: Mat) -> MeasureResult:
        assert isinstance(spec, StructuredNorm)
        reduced = self.reduce(spec, a, diagonal_measure=True)
        outer = self.registry.get_handler(spec.outer).measure(spec.outer, reduced)
        return MeasureResult(
            value=outer.value,
            method=MeasureMethod.HIERARCHICAL_BOUND,
            norm=describe_norm(spec),
        )
