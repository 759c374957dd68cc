"""Transaction coefficients between norms."""

from .base import BetaRule, BetaRuleRegistry, create_default_rules
from .bounds import prop4_bound, prop5_structured
from .resolve import beta_exact, default_rules, resolve_beta, structured_beta
from .sampling import sampled_sup

__all__ = [
    "BetaRule",
    "BetaRuleRegistry",
    "beta_exact",
    "create_default_rules",
    "default_rules",
    "prop4_bound",
    "prop5_structured",
    "resolve_beta",
    "sampled_sup",
    "structured_beta",
]
