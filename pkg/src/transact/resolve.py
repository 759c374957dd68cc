"""Exact coefficients, with bound-based fallbacks for the remaining pairs."""

from __future__ import annotations

import functools
import logging
import math

from ..errors import InvalidInput, UnsupportedPair
from ..models.norms import AnyNormSpec, StructuredNorm, WeightedLpNorm, describe_norm
from ..models.transaction import BetaKind, BetaResult
from .base import BetaRuleRegistry, create_default_rules
from .bounds import prop4_bound, prop5_structured

logger = logging.getLogger(__name__)


@functools.cache
def default_rules() -> BetaRuleRegistry:
    """Shared registry of the built-in exact rules."""
    return create_default_rules()


def _direction(source: AnyNormSpec, target: AnyNormSpec) -> tuple[str, str]:
    return describe_norm(source), describe_norm(target)


def _check_dims(source: AnyNormSpec, target: AnyNormSpec) -> None:
    if source.dim != target.dim:
        raise InvalidInput(f"dimension mismatch: {source.dim} vs {target.dim}")


def beta_exact(source: AnyNormSpec, target: AnyNormSpec) -> BetaResult:
    """Exact sup_{|x|_source = 1} |x|_target for supported pairs.

    Raises:
        InvalidInput: If the dimensions differ.
        UnsupportedPair: If no closed form covers the pair.
    """
    _check_dims(source, target)
    rule = default_rules().find(source, target)
    if rule is None:
        raise UnsupportedPair(describe_norm(source), describe_norm(target))
    value = rule.compute(source, target)
    return BetaResult(
        value=value,
        kind=BetaKind.EXACT,
        direction=_direction(source, target),
        method=rule.name,
    )


def _euclidean(n: int) -> WeightedLpNorm:
    return WeightedLpNorm.unweighted(2, n, label=f"euclidean[{n}]")


def _euclidean_structured(partition: list[int]) -> StructuredNorm:
    # Inner and outer Euclidean norms compose to the plain Euclidean norm
    return StructuredNorm(
        partition=partition,
        inner=[WeightedLpNorm.unweighted(2, size) for size in partition],
        outer=WeightedLpNorm.unweighted(2, len(partition)),
        label=f"euclidean[{sum(partition)}]",
    )


def _lp_euclid_bound(spec: WeightedLpNorm, to_euclid: bool) -> float:
    """Exponent-change bound between a weighted Lp norm (p not in {1, 2, inf}) and L2."""
    n = spec.dim
    ones = [1.0] * n
    if spec.p > 2.0:
        # (p, xi) is the larger exponent
        direction = 2 if to_euclid else 1
        return prop4_bound(spec.p, spec.weights, 2.0, ones, direction).value
    direction = 1 if to_euclid else 2
    return prop4_bound(2.0, ones, spec.p, spec.weights, direction).value


def _euclid_leg(spec: AnyNormSpec, to_euclid: bool) -> tuple[float, bool]:
    """Coefficient spec -> L2 (or L2 -> spec) and whether it is exact."""
    if isinstance(spec, StructuredNorm):
        euclid = _euclidean_structured(spec.partition)
        pair = (spec, euclid) if to_euclid else (euclid, spec)
        return structured_beta(*pair).value, False
    euclid = _euclidean(spec.dim)
    pair = (spec, euclid) if to_euclid else (euclid, spec)
    try:
        return beta_exact(*pair).value, True
    except UnsupportedPair:
        pass
    if isinstance(spec, WeightedLpNorm) and spec.p not in (1.0, 2.0) and not spec.is_max_norm:
        return _lp_euclid_bound(spec, to_euclid), False
    # Large non-diagonal quadratic paired with a corner-enumerated norm
    raise UnsupportedPair(*(_direction(*pair)))


def structured_beta(source: StructuredNorm, target: StructuredNorm) -> BetaResult:
    """Block-wise coefficient between structured norms with equal partitions.

    Inner and outer coefficients come from resolve_beta.

    Raises:
        UnsupportedPair: If the partitions differ.
    """
    if source.partition != target.partition:
        raise UnsupportedPair(describe_norm(source), describe_norm(target))
    inner = [
        resolve_beta(a, b).value for a, b in zip(source.inner, target.inner, strict=True)
    ]
    outer = resolve_beta(source.outer, target.outer).value
    return prop5_structured(outer, inner, source.outer, direction=_direction(source, target))


def resolve_beta(source: AnyNormSpec, target: AnyNormSpec) -> BetaResult:
    """Best available sound coefficient: exact, structured bound, or Euclidean chain.

    Raises:
        InvalidInput: If the dimensions differ.
        UnsupportedPair: If no sound chain exists.
    """
    try:
        return beta_exact(source, target)
    except UnsupportedPair:
        pass

    if isinstance(source, StructuredNorm) and isinstance(target, StructuredNorm):
        if source.partition == target.partition:
            return structured_beta(source, target)

    first, exact_first = _euclid_leg(source, to_euclid=True)
    second, exact_second = _euclid_leg(target, to_euclid=False)
    value = first * second
    if not math.isfinite(value) or value <= 0.0:
        raise UnsupportedPair(*_direction(source, target))
    logger.debug(
        "Chained %s -> L2 -> %s: %.6g (exact legs: %s, %s)",
        describe_norm(source),
        describe_norm(target),
        value,
        exact_first,
        exact_second,
    )
    return BetaResult(
        value=value,
        kind=BetaKind.PAPER_BOUND,
        direction=_direction(source, target),
        method="chained-euclidean",
    )
