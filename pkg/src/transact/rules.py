"""Exact transaction coefficients for supported norm pairs.

Notation: the source norm has weights xi (or matrix P), the target has
weights eta (or matrix Q). Every value is attained by some vector, so
these are the true suprema.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from ..errors import UnsupportedPair
from ..matcore import Mat, lambda_max_sym, spd_inv_sqrt
from ..models.norms import AnyNormSpec, StructuredNorm, WeightedLpNorm, describe_norm
from ..norms.quadratic import quadratic_matrix
from .base import BetaRule

# Sign-vector enumeration visits 2^(n-1) corners
MAX_ENUMERATION_DIM = 16


def sign_vectors(n: int) -> np.ndarray:
    """All sign vectors in {-1, 1}^n with first entry +1."""
    if n == 1:
        return np.ones((1, 1))
    rest = np.array(list(itertools.product((1.0, -1.0), repeat=n - 1)))
    return np.hstack([np.ones((rest.shape[0], 1)), rest])


def _lp(spec: AnyNormSpec, p: float) -> WeightedLpNorm | None:
    if isinstance(spec, WeightedLpNorm) and spec.p == p:
        return spec
    return None


def _quadratic(spec: AnyNormSpec) -> Mat | None:
    if isinstance(spec, StructuredNorm):
        return None
    return quadratic_matrix(spec)


def _is_diagonal(m: Mat) -> bool:
    return bool(np.all(m == np.diag(np.diag(m))))


def _check_enumerable(source: AnyNormSpec, target: AnyNormSpec) -> None:
    if source.dim > MAX_ENUMERATION_DIM:
        raise UnsupportedPair(describe_norm(source), describe_norm(target))


class IdenticalNormRule(BetaRule):
    """Same norm on both sides."""

    name = "identical"
    priority = 30

    def matches(self, source: AnyNormSpec, target: AnyNormSpec) -> bool:
        return source.model_dump(exclude={"label"}) == target.model_dump(exclude={"label"})

    def compute(self, source: AnyNormSpec, target: AnyNormSpec) -> float:
        return 1.0


class QuadraticPairRule(BetaRule):
    """sqrt(lambda_max(P^-1/2 Q P^-1/2)); weighted L2 counts as P = diag(xi)."""

    name = "quadratic-pair"
    priority = 20

    def matches(self, source: AnyNormSpec, target: AnyNormSpec) -> bool:
        return _quadratic(source) is not None and _quadratic(target) is not None

    def compute(self, source: AnyNormSpec, target: AnyNormSpec) -> float:
        p = _quadratic(source)
        q = _quadratic(target)
        assert p is not None and q is not None
        r = spd_inv_sqrt(p)
        return math.sqrt(max(lambda_max_sym(r @ q @ r), 0.0))


class SameExponentRule(BetaRule):
    """Weighted Lp to weighted Lp with equal p: max_i (eta_i / xi_i)^(1/p)."""

    name = "same-exponent"
    priority = 15

    def matches(self, source: AnyNormSpec, target: AnyNormSpec) -> bool:
        return (
            isinstance(source, WeightedLpNorm)
            and isinstance(target, WeightedLpNorm)
            and source.p == target.p
        )

    def compute(self, source: AnyNormSpec, target: AnyNormSpec) -> float:
        assert isinstance(source, WeightedLpNorm) and isinstance(target, WeightedLpNorm)
        ratio = float(np.max(target.xi / source.xi))
        if source.is_max_norm:
            return ratio
        return ratio ** (1.0 / source.p)


class L1ToQuadraticRule(BetaRule):
    """Weighted L1 to quadratic: max_i sqrt(Q_ii) / xi_i (attained at a basis vector)."""

    name = "l1-to-quadratic"
    priority = 10

    def matches(self, source: AnyNormSpec, target: AnyNormSpec) -> bool:
        return _lp(source, 1.0) is not None and _quadratic(target) is not None

    def compute(self, source: AnyNormSpec, target: AnyNormSpec) -> float:
        assert isinstance(source, WeightedLpNorm)
        q = _quadratic(target)
        assert q is not None
        return float(np.max(np.sqrt(np.diag(q)) / source.xi))


class QuadraticToL1Rule(BetaRule):
    """Quadratic to weighted L1: max over signs s of sqrt((eta*s)^T P^-1 (eta*s))."""

    name = "quadratic-to-l1"
    priority = 10

    def matches(self, source: AnyNormSpec, target: AnyNormSpec) -> bool:
        return _quadratic(source) is not None and _lp(target, 1.0) is not None

    def compute(self, source: AnyNormSpec, target: AnyNormSpec) -> float:
        assert isinstance(target, WeightedLpNorm)
        p = _quadratic(source)
        assert p is not None
        eta = target.xi
        if _is_diagonal(p):
            return math.sqrt(float(np.sum(eta * eta / np.diag(p))))
        _check_enumerable(source, target)
        r = spd_inv_sqrt(p)
        ys = sign_vectors(source.dim) * eta
        values = np.einsum("ki,ij,kj->k", ys, r @ r, ys)
        return math.sqrt(max(float(np.max(values)), 0.0))


class QuadraticToLinfRule(BetaRule):
    """Quadratic to weighted Linf: max_i eta_i sqrt((P^-1)_ii)."""

    name = "quadratic-to-linf"
    priority = 10

    def matches(self, source: AnyNormSpec, target: AnyNormSpec) -> bool:
        return (
            _quadratic(source) is not None
            and isinstance(target, WeightedLpNorm)
            and target.is_max_norm
        )

    def compute(self, source: AnyNormSpec, target: AnyNormSpec) -> float:
        assert isinstance(target, WeightedLpNorm)
        p = _quadratic(source)
        assert p is not None
        r = spd_inv_sqrt(p)
        p_inv_diag = np.einsum("ij,ij->i", r, r)
        return float(np.max(target.xi * np.sqrt(p_inv_diag)))


class LinfToQuadraticRule(BetaRule):
    """Weighted Linf to quadratic: max over corners y_i = s_i / xi_i of sqrt(y^T Q y)."""

    name = "linf-to-quadratic"
    priority = 10

    def matches(self, source: AnyNormSpec, target: AnyNormSpec) -> bool:
        return (
            isinstance(source, WeightedLpNorm)
            and source.is_max_norm
            and _quadratic(target) is not None
        )

    def compute(self, source: AnyNormSpec, target: AnyNormSpec) -> float:
        assert isinstance(source, WeightedLpNorm)
        q = _quadratic(target)
        assert q is not None
        xi = source.xi
        if _is_diagonal(q):
            return math.sqrt(float(np.sum(np.diag(q) / (xi * xi))))
        _check_enumerable(source, target)
        ys = sign_vectors(source.dim) / xi
        values = np.einsum("ki,ij,kj->k", ys, q, ys)
        return math.sqrt(max(float(np.max(values)), 0.0))


class L1ToLinfRule(BetaRule):
    """Weighted L1 to weighted Linf: max_i eta_i / xi_i."""

    name = "l1-to-linf"
    priority = 5

    def matches(self, source: AnyNormSpec, target: AnyNormSpec) -> bool:
        return (
            _lp(source, 1.0) is not None
            and isinstance(target, WeightedLpNorm)
            and target.is_max_norm
        )

    def compute(self, source: AnyNormSpec, target: AnyNormSpec) -> float:
        assert isinstance(source, WeightedLpNorm) and isinstance(target, WeightedLpNorm)
        return float(np.max(target.xi / source.xi))


class LinfToL1Rule(BetaRule):
    """Weighted Linf to weighted L1: sum_i eta_i / xi_i."""

    name = "linf-to-l1"
    priority = 5

    def matches(self, source: AnyNormSpec, target: AnyNormSpec) -> bool:
        return (
            isinstance(source, WeightedLpNorm)
            and source.is_max_norm
            and _lp(target, 1.0) is not None
        )

    def compute(self, source: AnyNormSpec, target: AnyNormSpec) -> float:
        assert isinstance(source, WeightedLpNorm) and isinstance(target, WeightedLpNorm)
        return float(np.sum(target.xi / source.xi))
