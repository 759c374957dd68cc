"""Weighted Lp norms |x|_{xi,p}."""

from __future__ import annotations

import numpy as np

from ..errors import UnsupportedNorm
from ..matcore import Mat
from ..models.norms import AnyNormSpec, MeasureMethod, MeasureResult, WeightedLpNorm, describe_norm
from .base import NormHandler
from .quadratic import quadratic_induced, quadratic_measure


def lp_eval(spec: WeightedLpNorm, x: np.ndarray) -> np.ndarray:
    xi = spec.xi
    ax = np.abs(x)
    if spec.is_max_norm:
        return np.max(xi * ax, axis=-1)
    if spec.p == 1.0:
        return np.sum(xi * ax, axis=-1)
    if spec.p == 2.0:
        return np.sqrt(np.sum(xi * ax * ax, axis=-1))
    return np.sum(xi * ax**spec.p, axis=-1) ** (1.0 / spec.p)


def weighted_abs(eta: np.ndarray, b: Mat, xi: np.ndarray) -> Mat:
    """Entries eta_i |b_ij| / xi_j."""
    return eta[:, None] * np.abs(b) / xi[None, :]


def lp_cross(source: WeightedLpNorm, target: WeightedLpNorm, b: Mat) -> float:
    """Exact induced norm of B between weighted L1 or weighted Linf norms of the same p."""
    scaled = weighted_abs(target.xi, b, source.xi)
    if source.p == 1.0:
        return float(np.max(np.sum(scaled, axis=0)))
    return float(np.max(np.sum(scaled, axis=1)))


def _require_closed_form(spec: WeightedLpNorm) -> None:
    if spec.p not in (1.0, 2.0) and not spec.is_max_norm:
        raise UnsupportedNorm(
            f"No closed-form induced norm or measure for p={spec.p:g} (supported: 1, 2, inf)"
        )


class WeightedLpHandler(NormHandler):
    """Handler for weighted L1, L2 and Linf norms.

    Weighted L2 runs through the quadratic formulas with P = diag(xi).
    """

    name = "weighted-lp"
    priority = 5
    spec_types = (WeightedLpNorm,)

    def evaluate(self, spec: AnyNormSpec, x: np.ndarray) -> np.ndarray:
        assert isinstance(spec, WeightedLpNorm)
        return lp_eval(spec, x)

    def induced_norm(self, spec: AnyNormSpec, a: Mat) -> float:
        assert isinstance(spec, WeightedLpNorm)
        _require_closed_form(spec)
        if spec.p == 2.0:
            return quadratic_induced(np.diag(spec.xi), a)
        return lp_cross(spec, spec, a)

    def measure(self, spec: AnyNormSpec, a: Mat) -> MeasureResult:
        assert isinstance(spec, WeightedLpNorm)
        _require_closed_form(spec)
        if spec.p == 2.0:
            value = quadratic_measure(np.diag(spec.xi), a)
        else:
            scaled = weighted_abs(spec.xi, a, spec.xi)
            np.fill_diagonal(scaled, np.diag(a))
            axis = 0 if spec.p == 1.0 else 1
            value = float(np.max(np.sum(scaled, axis=axis)))
        return MeasureResult(
            value=value,
            method=MeasureMethod.CLOSED_FORM,
            norm=describe_norm(spec),
        )
