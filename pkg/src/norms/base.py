"""Base class and registry for norm-family handlers."""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from typing import ClassVar

import numpy as np

from ..errors import UnsupportedNorm
from ..matcore import Mat
from ..models.norms import AnyNormSpec, MeasureResult

logger = logging.getLogger(__name__)


class NormHandler(ABC):
    """Abstract base class for norm-family handlers.

    A handler knows, for one family of norm specifications, how to:
    1. Evaluate the vector norm (batched along the last axis)
    2. Compute the induced matrix norm
    3. Compute the matrix measure (logarithmic norm)
    """

    #: Handler name for identification
    name: ClassVar[str] = ""

    #: Priority (higher = checked first)
    priority: ClassVar[int] = 0

    #: Specification types this handler accepts
    spec_types: ClassVar[tuple[type, ...]] = ()

    def can_handle(self, spec: AnyNormSpec) -> bool:
        """Check if this handler can process the given specification."""
        return isinstance(spec, self.spec_types)

    @abstractmethod
    def evaluate(self, spec: AnyNormSpec, x: np.ndarray) -> np.ndarray:
        """Norm of each vector along the last axis of x."""

    @abstractmethod
    def induced_norm(self, spec: AnyNormSpec, a: Mat) -> float:
        """Induced norm of a square matrix."""

    @abstractmethod
    def measure(self, spec: AnyNormSpec, a: Mat) -> MeasureResult:
        """Matrix measure of a square matrix."""


class NormRegistry:
    """Registry for norm handlers, selected by specification type."""

    def __init__(self) -> None:
        """Initialize the registry."""
        self._handlers: list[NormHandler] = []

    def register(self, handler: NormHandler) -> None:
        """Register a handler.

        Args:
            handler: Handler to register.
        """
        self._handlers.append(handler)
        self._handlers.sort(key=lambda h: h.priority, reverse=True)
        logger.debug("Registered norm handler: %s (priority=%d)", handler.name, handler.priority)

    def get_handler(self, spec: AnyNormSpec) -> NormHandler:
        """Get the handler for a specification.

        Raises:
            UnsupportedNorm: If no registered handler accepts the specification.
        """
        for handler in self._handlers:
            if handler.can_handle(spec):
                return handler
        raise UnsupportedNorm(f"No handler for norm specification {type(spec).__name__}")

    @property
    def handlers(self) -> list[NormHandler]:
        """Get all registered handlers."""
        return list(self._handlers)


def create_default_registry() -> NormRegistry:
    """Create a registry with the weighted-Lp, quadratic and structured handlers."""
    # Import here to avoid circular imports
    from .lp import WeightedLpHandler
    from .quadratic import QuadraticHandler
    from .structured import StructuredHandler

    registry = NormRegistry()
    registry.register(StructuredHandler(registry))  # priority=20
    registry.register(QuadraticHandler())  # priority=10
    registry.register(WeightedLpHandler())  # priority=5

    logger.debug("Created default norm registry with %d handlers", len(registry.handlers))
    return registry
