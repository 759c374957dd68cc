"""Quadratic norms |x|_P = sqrt(x^T P x)."""

from __future__ import annotations


import numpy as np

from ..matcore import Mat, lambda_max_sym, max_singular, spd_inv_sqrt, spd_sqrt
from ..models.norms import AnyNormSpec, MeasureMethod, MeasureResult, QuadraticNorm, WeightedLpNorm, describe_norm
from .base import NormHandler


def quadratic_matrix(spec: AnyNormSpec) -> Mat | None:
    """P for a quadratic norm, diag(xi) for a weighted L2 norm, else None."""
    if isinstance(spec, QuadraticNorm):
        return spec.matrix
    if isinstance(spec, WeightedLpNorm) and spec.p == 2.0:
        return np.diag(spec.xi)
    return None


def quadratic_eval(p: Mat, x: np.ndarray) -> np.ndarray:
    squared = np.einsum("...i,ij,...j->...", x, p, x)
    return np.sqrt(np.maximum(squared, 0.0))


def quadratic_induced(p: Mat, a: Mat) -> float:
    """max_singular(Theta A Theta^-1) with Theta = P^(1/2)."""
    return max_singular(spd_sqrt(p) @ a @ spd_inv_sqrt(p))


def quadratic_cross(p_from: Mat, p_to: Mat, b: Mat) -> float:
    """Induced norm of a rectangular B from |.|_{P_from} to |.|_{P_to}."""
    return max_singular(spd_sqrt(p_to) @ b @ spd_inv_sqrt(p_from))


def quadratic_measure(p: Mat, a: Mat, p_dot: Mat | None = None) -> float:
    """1/2 lambda_max(P^-1/2 (P A + A^T P + Pdot) P^-1/2)."""
    r = spd_inv_sqrt(p)
    q = p @ a + a.T @ p
    if p_dot is not None:
        q = q + p_dot
    s = r @ q @ r
    return 0.5 * lambda_max_sym(0.5 * (s + s.T))


class QuadraticHandler(NormHandler):
    """Handler for quadratic norm specifications."""

    name = "quadratic"
    priority = 10
    spec_types = (QuadraticNorm,)

    def evaluate(self, spec: AnyNormSpec, x: np.ndarray) -> np.ndarray:
        assert isinstance(spec, QuadraticNorm)
        return quadratic_eval(spec.matrix, x)

    def induced_norm(self, spec: AnyNormSpec, a: Mat) -> float:
        assert isinstance(spec, QuadraticNorm)
        return quadratic_induced(spec.matrix, a)

    def measure(self, spec: AnyNormSpec, a: Mat) -> MeasureResult:
        assert isinstance(spec, QuadraticNorm)
        return MeasureResult(
            value=quadratic_measure(spec.matrix, a),
            method=MeasureMethod.CLOSED_FORM,
            norm=describe_norm(spec),
        )
