"""Weighted-Lp exponent-change and structured-norm coefficient bounds."""

from __future__ import annotations

import math
from typing import Literal

import numpy as np
import numpy.typing as npt

from ..errors import InvalidInput
from ..matcore import as_vector
from ..models.norms import AnyNormSpec, WeightedLpNorm, describe_norm
from ..models.transaction import BetaKind, BetaResult, Prop4Variant
from ..norms import induced_matrix_norm


def _weight_power(weights: np.ndarray, p: float) -> np.ndarray:
    # |x|_{inf,xi} = max xi_i |x_i|, so the max norm uses xi itself
    if math.isinf(p):
        return weights
    return weights ** (1.0 / p)


def _inverse(p: float) -> float:
    return 0.0 if math.isinf(p) else 1.0 / p


def prop4_bound(
    p: float,
    xi: npt.ArrayLike,
    q: float,
    eta: npt.ArrayLike,
    direction: Literal[1, 2],
    variant: Prop4Variant | str = Prop4Variant.CORRECTED,
) -> BetaResult:
    """Coefficient between |.|_{xi,p} and |.|_{eta,q} for p > q >= 1.

    Direction 1 bounds |x|_{xi,p} <= beta |x|_{eta,q}; direction 2 bounds
    |x|_{eta,q} <= beta |x|_{xi,p}, where the corrected variant uses the
    factor n^(1/q - 1/p) and the literal one n^(1/q) - n^(1/p).

    Raises:
        InvalidInput: If p <= q, q < 1, or the weight vectors are invalid.
    """
    variant = Prop4Variant(variant)
    if not q >= 1.0 or not p > q:
        raise InvalidInput(f"need p > q >= 1, got p={p}, q={q}")
    xi_v = as_vector(xi, "xi")
    eta_v = as_vector(eta, "eta")
    if xi_v.shape != eta_v.shape:
        raise InvalidInput("xi and eta must have equal length")
    if np.any(xi_v <= 0.0) or np.any(eta_v <= 0.0):
        raise InvalidInput("weights must be strictly positive")

    n = xi_v.shape[0]
    xi_p = _weight_power(xi_v, p)
    eta_q = eta_v ** (1.0 / q)
    big = WeightedLpNorm(p=p, weights=xi_v.tolist())
    small = WeightedLpNorm(p=q, weights=eta_v.tolist())

    if direction == 1:
        value = float(np.max(xi_p / eta_q))
        return BetaResult(
            value=value,
            kind=BetaKind.PAPER_BOUND,
            direction=(describe_norm(small), describe_norm(big)),
            method="prop4-direction-1",
            variant=variant,
        )
    if direction != 2:
        raise InvalidInput(f"direction must be 1 or 2, got {direction}")

    if variant == Prop4Variant.CORRECTED:
        factor = n ** (1.0 / q - _inverse(p))
    else:
        factor = n ** (1.0 / q) - n ** _inverse(p)
    value = factor * float(np.max(eta_q / xi_p))
    return BetaResult(
        value=max(value, 0.0),
        kind=BetaKind.PAPER_BOUND,
        direction=(describe_norm(big), describe_norm(small)),
        method="prop4-direction-2",
        variant=variant,
    )


def prop5_structured(
    beta_outer: float,
    inner_taus: npt.ArrayLike,
    outer_spec: AnyNormSpec,
    direction: tuple[str, str] = ("structured", "structured"),
) -> BetaResult:
    """tau_S times the outer-induced norm of diag(tau_k).

    Raises:
        InvalidInput: If any coefficient is not positive or dimensions disagree.
    """
    taus = as_vector(inner_taus, "inner_taus")
    if beta_outer <= 0.0 or np.any(taus <= 0.0):
        raise InvalidInput("structured coefficients must be positive")
    if taus.shape[0] != outer_spec.dim:
        raise InvalidInput(f"{taus.shape[0]} inner coefficients for an outer norm on R^{outer_spec.dim}")
    value = beta_outer * induced_matrix_norm(outer_spec, np.diag(taus))
    return BetaResult(
        value=value,
        kind=BetaKind.PAPER_BOUND,
        direction=direction,
        method="prop5-structured",
    )
