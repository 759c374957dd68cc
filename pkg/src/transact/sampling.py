"""Monte-Carlo lower estimate of transaction coefficients (validation only)."""

from __future__ import annotations

import logging

import numpy as np

from ..errors import InvalidInput
from ..models.norms import AnyNormSpec, describe_norm
from ..models.transaction import BetaKind, BetaResult
from ..norms import norm_eval_batch
from .rules import sign_vectors

logger = logging.getLogger(__name__)

# Corner directions are added up to this dimension
MAX_CORNER_DIM = 12


def sampled_sup(source: AnyNormSpec, target: AnyNormSpec, n_samples: int, seed: int = 0) -> BetaResult:
    """Max of |x|_target / |x|_source over random directions.

    Candidates are Gaussian directions from a Philox generator, plus the
    canonical basis and (for small n) the +-1 corners, so the value is
    reproducible for a given seed and never exceeds the true sup.

    Raises:
        InvalidInput: If dimensions differ or n_samples < 1.
    """
    if n_samples < 1:
        raise InvalidInput(f"n_samples must be positive, got {n_samples}")
    if source.dim != target.dim:
        raise InvalidInput(f"dimension mismatch: {source.dim} vs {target.dim}")

    n = source.dim
    rng = np.random.Generator(np.random.Philox(seed))
    candidates = [np.eye(n), rng.standard_normal((n_samples, n))]
    if n <= MAX_CORNER_DIM:
        candidates.append(sign_vectors(n))
    xs = np.concatenate(candidates)

    from_norms = norm_eval_batch(source, xs)
    keep = from_norms > 0.0
    ratios = norm_eval_batch(target, xs[keep]) / from_norms[keep]
    value = float(np.max(ratios))
    logger.debug("Sampled %d directions, sup estimate %.6g", xs.shape[0], value)

    return BetaResult(
        value=value,
        kind=BetaKind.SAMPLED_LOWER,
        direction=(describe_norm(source), describe_norm(target)),
        method=f"sampled-{n_samples}",
    )
