"""Base class and registry for exact transaction-coefficient rules."""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from typing import ClassVar

from ..models.norms import AnyNormSpec

logger = logging.getLogger(__name__)


class BetaRule(ABC):
    """Closed form for beta = sup_{|x|_source = 1} |x|_target on one family of norm pairs."""

    #: Rule name, recorded as the BetaResult method
    name: ClassVar[str] = ""

    #: Priority (higher = tried first)
    priority: ClassVar[int] = 0

    @abstractmethod
    def matches(self, source: AnyNormSpec, target: AnyNormSpec) -> bool:
        """Check if the rule applies to the pair."""

    @abstractmethod
    def compute(self, source: AnyNormSpec, target: AnyNormSpec) -> float:
        """Exact coefficient for a matching pair.

        Raises:
            UnsupportedPair: If the pair matches but is too large to evaluate exactly.
        """


class BetaRuleRegistry:
    """Registry of exact rules, tried in priority order."""

    def __init__(self) -> None:
        """Initialize the registry."""
        self._rules: list[BetaRule] = []

    def register(self, rule: BetaRule) -> None:
        """Register a rule.

        Args:
            rule: Rule to register.
        """
        self._rules.append(rule)
        self._rules.sort(key=lambda r: r.priority, reverse=True)
        logger.debug("Registered beta rule: %s (priority=%d)", rule.name, rule.priority)

    def find(self, source: AnyNormSpec, target: AnyNormSpec) -> BetaRule | None:
        """Get the first rule that matches the pair, or None."""
        for rule in self._rules:
            if rule.matches(source, target):
                return rule
        return None

    @property
    def rules(self) -> list[BetaRule]:
        """Get all registered rules."""
        return list(self._rules)


def create_default_rules() -> BetaRuleRegistry:
    """Create a registry with every built-in exact rule."""
    # Import here to avoid circular imports
    from .rules import (
        IdenticalNormRule,
        L1ToLinfRule,
        L1ToQuadraticRule,
        LinfToL1Rule,
        LinfToQuadraticRule,
        QuadraticPairRule,
        QuadraticToL1Rule,
        QuadraticToLinfRule,
        SameExponentRule,
    )

    registry = BetaRuleRegistry()
    registry.register(IdenticalNormRule())  # priority=30
    registry.register(QuadraticPairRule())  # priority=20
    registry.register(SameExponentRule())  # priority=15
    registry.register(L1ToQuadraticRule())  # priority=10
    registry.register(QuadraticToL1Rule())  # priority=10
    registry.register(QuadraticToLinfRule())  # priority=10
    registry.register(LinfToQuadraticRule())  # priority=10
    registry.register(L1ToLinfRule())  # priority=5
    registry.register(LinfToL1Rule())  # priority=5

    logger.debug("Created default beta registry with %d rules", len(registry.rules))
    return registry
