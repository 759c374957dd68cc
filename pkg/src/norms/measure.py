"""Public norm, induced-norm and matrix-measure operations."""

from __future__ import annotations

import functools
import logging

import numpy as np
import numpy.typing as npt

from ..errors import InvalidInput, UnsupportedNorm
from ..matcore import Mat, as_matrix, as_vector, max_singular
from ..models.norms import (
    AnyNormSpec,
    CrossNormResult,
    MeasureResult,
    StructuredNorm,
    WeightedLpNorm,
    describe_norm,
)
from .base import NormRegistry, create_default_registry
from .lp import lp_cross
from .quadratic import quadratic_cross, quadratic_matrix, quadratic_measure
from .structured import StructuredHandler

logger = logging.getLogger(__name__)

ORACLE_MIN_H = 1e-8
ORACLE_MAX_H = 1e-3
STRUCTURED_ORACLE_SAMPLES = 4000


@functools.cache
def default_registry() -> NormRegistry:
    """Shared registry of the built-in norm handlers."""
    return create_default_registry()


def _square_for(spec: AnyNormSpec, a: npt.ArrayLike) -> Mat:
    m = as_matrix(a)
    if m.shape != (spec.dim, spec.dim):
        raise InvalidInput(f"matrix shape {m.shape} does not match norm dimension {spec.dim}")
    return m


def norm_eval(spec: AnyNormSpec, x: npt.ArrayLike) -> float:
    """Evaluate the vector norm.

    Raises:
        InvalidInput: If the dimension of x does not match the norm.
    """
    v = as_vector(x)
    if v.shape[0] != spec.dim:
        raise InvalidInput(f"vector of length {v.shape[0]} for a norm on R^{spec.dim}")
    return float(default_registry().get_handler(spec).evaluate(spec, v))


def norm_eval_batch(spec: AnyNormSpec, xs: npt.ArrayLike) -> np.ndarray:
    """Evaluate the norm of every row of a 2-D array."""
    arr = as_matrix(xs, "xs")
    if arr.shape[1] != spec.dim:
        raise InvalidInput(f"rows of length {arr.shape[1]} for a norm on R^{spec.dim}")
    return np.asarray(default_registry().get_handler(spec).evaluate(spec, arr), dtype=np.float64)


def induced_matrix_norm(spec: AnyNormSpec, a: npt.ArrayLike) -> float:
    """Matrix norm induced by the vector norm.

    Structured norms return the hierarchical upper bound.

    Raises:
        UnsupportedNorm: For weighted Lp with p outside {1, 2, inf}.
    """
    m = _square_for(spec, a)
    return default_registry().get_handler(spec).induced_norm(spec, m)


def matrix_measure(spec: AnyNormSpec, a: npt.ArrayLike) -> MeasureResult:
    """Matrix measure (logarithmic norm) of A under the norm.

    Raises:
        UnsupportedNorm: For weighted Lp with p outside {1, 2, inf}.
    """
    m = _square_for(spec, a)
    return default_registry().get_handler(spec).measure(spec, m)


def _oracle_quotient(spec: AnyNormSpec, a: Mat, h: float) -> float:
    eye = np.eye(a.shape[0])
    return (induced_matrix_norm(spec, eye + h * a) - 1.0) / h


def _structured_oracle(spec: StructuredNorm, a: Mat, h: float) -> float:
    # Sampled sup over directions of the one-sided difference quotient
    handler = default_registry().get_handler(spec)
    rng = np.random.Generator(np.random.Philox(0))
    xs = rng.standard_normal((STRUCTURED_ORACLE_SAMPLES, spec.dim))
    xs = np.concatenate([np.eye(spec.dim), xs])
    base = handler.evaluate(spec, xs)

    def quotient(step: float) -> np.ndarray:
        moved = handler.evaluate(spec, xs + step * (xs @ a.T))
        return (moved - base) / (step * base)

    return float(np.max(2.0 * quotient(0.5 * h) - quotient(h)))


def measure_limit_oracle(spec: AnyNormSpec, a: npt.ArrayLike, h: float) -> float:
    """Richardson-extrapolated right difference quotient (||I + hA|| - 1) / h.

    For structured norms (no closed-form induced norm) the sup over
    directions is sampled, which gives a lower estimate.

    Raises:
        InvalidInput: If h is outside [1e-8, 1e-3].
    """
    if not ORACLE_MIN_H <= h <= ORACLE_MAX_H:
        raise InvalidInput(f"h must lie in [{ORACLE_MIN_H:g}, {ORACLE_MAX_H:g}], got {h:g}")
    m = _square_for(spec, a)
    if isinstance(spec, StructuredNorm):
        return _structured_oracle(spec, m, h)
    return 2.0 * _oracle_quotient(spec, m, 0.5 * h) - _oracle_quotient(spec, m, h)


def tv_quadratic_measure(p: npt.ArrayLike, p_dot: npt.ArrayLike, a: npt.ArrayLike) -> float:
    """Measure for a time-varying quadratic norm:
    1/2 lambda_max(P^-1/2 (P A + A^T P + Pdot) P^-1/2).

    Raises:
        NotPositiveDefinite: If P is not SPD.
        InvalidInput: On dimension mismatch or asymmetric Pdot.
    """
    pm = as_matrix(p, "P")
    pd = as_matrix(p_dot, "Pdot")
    am = as_matrix(a, "A")
    if not pm.shape == pd.shape == am.shape or pm.shape[0] != pm.shape[1]:
        raise InvalidInput(f"P {pm.shape}, Pdot {pd.shape} and A {am.shape} must be equal square shapes")
    if float(np.max(np.abs(pd - pd.T))) > 1e-10 * max(1.0, float(np.max(np.abs(pd)))):
        raise InvalidInput("Pdot must be symmetric")
    return quadratic_measure(pm, am, pd)


def _chained_cross(source: AnyNormSpec, target: AnyNormSpec, b: Mat) -> CrossNormResult:
    # Import here to avoid circular imports
    from ..transact.resolve import resolve_beta

    to_euclid = resolve_beta(source, WeightedLpNorm.unweighted(2, source.dim))
    from_euclid = resolve_beta(WeightedLpNorm.unweighted(2, target.dim), target)
    spectral = max_singular(b)
    return CrossNormResult(
        value=from_euclid.value * spectral * to_euclid.value,
        exact=False,
        method="chained-euclidean",
    )


def cross_block_norm(source: AnyNormSpec, target: AnyNormSpec, b: npt.ArrayLike) -> CrossNormResult:
    """sup over |x|_source = 1 of |B x|_target for a rectangular B.

    Exact for two quadratic norms (weighted L2 included) and for weighted
    L1/Linf pairs of equal p; otherwise an upper bound chained through
    the Euclidean norm.

    Raises:
        UnsupportedNorm: If either norm is structured.
        InvalidInput: If B's shape does not map source to target.
    """
    if isinstance(source, StructuredNorm) or isinstance(target, StructuredNorm):
        raise UnsupportedNorm("cross_block_norm needs non-structured norms")
    m = as_matrix(b, "B")
    if m.shape != (target.dim, source.dim):
        raise InvalidInput(f"B has shape {m.shape}, expected ({target.dim}, {source.dim})")

    p_source = quadratic_matrix(source)
    p_target = quadratic_matrix(target)
    if p_source is not None and p_target is not None:
        return CrossNormResult(
            value=quadratic_cross(p_source, p_target, m), exact=True, method="quadratic"
        )
    if (
        isinstance(source, WeightedLpNorm)
        and isinstance(target, WeightedLpNorm)
        and source.p == target.p
        and (source.p == 1.0 or source.is_max_norm)
    ):
        return CrossNormResult(value=lp_cross(source, target, m), exact=True, method="weighted-lp")
    return _chained_cross(source, target, m)


def structured_reduced(a: npt.ArrayLike, spec: StructuredNorm) -> Mat:
    """Reduced K x K matrix: block measures on the diagonal, cross-block norms elsewhere.

    The measure of this matrix under the outer norm bounds the structured
    measure from above.
    """
    if not isinstance(spec, StructuredNorm):
        raise UnsupportedNorm(f"{describe_norm(spec)} is not a structured norm")
    m = _square_for(spec, a)
    handler = default_registry().get_handler(spec)
    assert isinstance(handler, StructuredHandler)
    reduced = handler.reduce(spec, m, diagonal_measure=True)
    logger.debug("Reduced %dx%d matrix to %dx%d", m.shape[0], m.shape[1], *reduced.shape)
    return reduced
