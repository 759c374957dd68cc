"""Chua circuit node dynamics."""

from __future__ import annotations

import numpy as np
import numpy.typing as npt

from ..matcore import Mat
from ..models.chua import ChuaParams
from ..simulation import FunctionMode


def chua_g(params: ChuaParams, w1: npt.ArrayLike) -> np.ndarray:
    """Piecewise-linear diode characteristic g(w1)."""
    w1 = np.asarray(w1, dtype=np.float64)
    return params.m0 * w1 + 0.5 * (params.m1 - params.m0) * (np.abs(w1 + 1.0) - np.abs(w1 - 1.0))


def chua_field(params: ChuaParams, w: npt.ArrayLike) -> np.ndarray:
    """Chua vector field; the last axis holds (w1, w2, w3)."""
    w = np.asarray(w, dtype=np.float64)
    w1, w2, w3 = w[..., 0], w[..., 1], w[..., 2]
    return np.stack(
        [
            params.p * (params.G * (w2 - w1) - chua_g(params, w1)),
            params.G * (w1 - w2) + w3,
            -params.q * w2,
        ],
        axis=-1,
    )


def chua_jacobian_at_slope(params: ChuaParams, slope: float) -> Mat:
    p, G, q = params.p, params.G, params.q
    return np.array(
        [
            [p * (-G - slope), p * G, 0.0],
            [G, -G, 1.0],
            [0.0, -q, 0.0],
        ]
    )


def chua_jacobian(params: ChuaParams, w: npt.ArrayLike) -> Mat:
    """Jacobian at a single state; |w1| >= 1 uses the outer slope m0."""
    w1 = float(np.asarray(w, dtype=np.float64)[0])
    slope = params.m1 if abs(w1) < 1.0 else params.m0
    return chua_jacobian_at_slope(params, slope)


def chua_jacobian_slopes(params: ChuaParams) -> list[Mat]:
    """The two values the Jacobian takes, inner slope first.

    g is piecewise linear, so a maximum over these is a maximum over
    every state.
    """
    return [chua_jacobian_at_slope(params, params.m1), chua_jacobian_at_slope(params, params.m0)]


def chua_mode(params: ChuaParams | None = None) -> FunctionMode:
    params = params or ChuaParams()
    return FunctionMode(
        3,
        lambda t, w: chua_field(params, w),
        lambda t, w: chua_jacobian(params, w),
    )
