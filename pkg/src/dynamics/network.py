"""Blinking networks: diffusive coupling switched on and off by a binary signal."""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, Field

from ..certify import solve_min_period, sync_certify
from ..errors import InvalidInput
from ..matcore import Mat, as_matrix, kron
from ..models.certificate import Certificate
from ..models.norms import AnyNormSpec, WeightedLpNorm
from ..norms import matrix_measure
from ..simulation import Mode, SwitchedSystem, Trajectory
from ..transact import resolve_beta
from .chua import ChuaParams, chua_jacobian_slopes
from .graph import Graph, lambda2, laplacian

logger = logging.getLogger(__name__)

# Weighted-1 norm used with coupling off in the Chua example
CHUA_OFF_WEIGHTS = (1.0, 3.4042, 1.0369)


@dataclass(frozen=True)
class BlinkNetConfig:
    """Identical nodes coupled through k * (L kron Gamma) while sigma = 1."""

    node: Mode
    graph: Graph
    k: float = 1.0
    gamma: Mat | None = None
    _gamma: Mat = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if self.k < 0.0:
            raise InvalidInput(f"coupling strength k must be >= 0, got {self.k}")
        if self.graph.nodes < 1:
            raise InvalidInput("network needs at least one node")
        n = self.node.dim
        gamma = np.eye(n) if self.gamma is None else as_matrix(self.gamma, "Gamma")
        if gamma.shape != (n, n):
            raise InvalidInput(f"Gamma must be {n}x{n}, got {gamma.shape}")
        object.__setattr__(self, "_gamma", gamma)

    @property
    def inner_coupling(self) -> Mat:
        return self._gamma

    @property
    def dim(self) -> int:
        return self.graph.nodes * self.node.dim


class _NetworkMode(Mode):
    """All nodes run the same dynamics; the coupling term is linear."""

    def __init__(self, node: Mode, nodes: int, coupling: Mat) -> None:
        self.node = node
        self.nodes = nodes
        self.coupling = coupling

    @property
    def dim(self) -> int:
        return self.nodes * self.node.dim

    def field(self, t: float, x: np.ndarray) -> np.ndarray:
        per_node = x.reshape(x.shape[:-1] + (self.nodes, self.node.dim))
        return self.node.field(t, per_node).reshape(x.shape) - x @ self.coupling.T

    def jacobian(self, t: float, x: np.ndarray) -> Mat:
        n = self.node.dim
        out = -self.coupling.copy()
        for i in range(self.nodes):
            block = slice(i * n, (i + 1) * n)
            out[block, block] += self.node.jacobian(t, x[block])
        return out


def blink_network_field(config: BlinkNetConfig, *, validate: bool = True) -> SwitchedSystem:
    """Mode 0: uncoupled nodes; mode 1: nodes minus k (L kron Gamma) x."""
    m, n = config.graph.nodes, config.node.dim
    coupling = config.k * kron(laplacian(config.graph), config.inner_coupling)
    logger.debug("Assembled blinking network: %d nodes of dimension %d, k=%g", m, n, config.k)
    return SwitchedSystem(
        {
            0: _NetworkMode(config.node, m, np.zeros((m * n, m * n))),
            1: _NetworkMode(config.node, m, coupling),
        },
        validate=validate,
    )


def sync_error(states: npt.ArrayLike) -> np.ndarray | float:
    """Mean distance of the node states to their centroid.

    states has shape (..., m, n); leading axes are kept.
    """
    x = np.asarray(states, dtype=np.float64)
    if x.ndim < 2:
        raise InvalidInput("sync_error expects per-node states of shape (m, n)")
    centroid = x.mean(axis=-2, keepdims=True)
    err = np.linalg.norm(x - centroid, axis=-1).mean(axis=-1)
    return float(err) if err.ndim == 0 else err


def trajectory_sync_error(trajectory: Trajectory, nodes: int) -> np.ndarray:
    n = trajectory.dim // nodes
    if nodes * n != trajectory.dim:
        raise InvalidInput(f"state dimension {trajectory.dim} is not divisible by {nodes} nodes")
    return np.asarray(sync_error(trajectory.states.reshape(len(trajectory), nodes, n)))


def variational_mode_matrix(
    jacobian: npt.ArrayLike,
    k: float,
    lam: float,
    gamma: npt.ArrayLike,
    sigma: int,
) -> Mat:
    """Df(w) - sigma * k * lambda_i * Gamma for the i-th transverse mode."""
    if sigma not in (0, 1):
        raise InvalidInput(f"sigma must be 0 or 1, got {sigma}")
    return as_matrix(jacobian, "jacobian") - sigma * k * lam * as_matrix(gamma, "Gamma")


def measure_sweep(
    spec: AnyNormSpec,
    jacobian: Callable[[np.ndarray], Mat],
    samples: Iterable[npt.ArrayLike],
) -> float:
    """Largest measure of the Jacobian over sampled states."""
    values = [matrix_measure(spec, jacobian(np.asarray(w, dtype=np.float64))).value for w in samples]
    if not values:
        raise InvalidInput("measure_sweep needs at least one sample")
    return max(values)


class SyncBounds(BaseModel):
    """Constants feeding the synchronisation condition, recomputed from the network."""

    model_config = ConfigDict(frozen=True)

    lambda2: float = Field(..., description="Algebraic connectivity of the graph")
    mu0: float = Field(..., description="Measure bound with coupling off")
    mu1: float = Field(..., description="Measure bound of Df - k lambda2 Gamma")
    beta01: float = Field(..., gt=0.0)
    beta10: float = Field(..., gt=0.0)
    coupling_measure: float = Field(..., description="mu1(-Gamma); must be <= 0")
    duty_off: float = Field(..., ge=0.0, lt=1.0)

    @property
    def coupling_verified(self) -> bool:
        return self.coupling_measure <= 0.0

    def min_period(self, c_min: float = 0.0) -> float:
        return solve_min_period(self.mu0, self.mu1, self.beta01, self.beta10, self.duty_off, c_min)

    def certify(self, period: float, c_min: float = 0.0) -> Certificate:
        return sync_certify(
            self.mu0,
            self.mu1,
            self.beta01,
            self.beta10,
            self.duty_off,
            period,
            c_min,
            coupling_verified=self.coupling_verified,
        )


def sync_bounds(
    jacobians: Sequence[npt.ArrayLike],
    graph: Graph,
    norm_off: AnyNormSpec,
    norm_on: AnyNormSpec,
    k: float = 1.0,
    gamma: npt.ArrayLike | None = None,
    duty_off: float = 0.25,
) -> SyncBounds:
    """Recompute lambda2, both measure bounds and both transaction coefficients.

    jacobians must cover every value Df takes on the attractor (or a
    sampled sweep of it); the bounds are maxima over that list.
    """
    if not jacobians:
        raise InvalidInput("need at least one node Jacobian")
    mats = [as_matrix(j, "jacobian") for j in jacobians]
    n = mats[0].shape[0]
    gamma_mat = np.eye(n) if gamma is None else as_matrix(gamma, "Gamma")
    lam = lambda2(graph)
    mu0 = max(matrix_measure(norm_off, variational_mode_matrix(j, k, lam, gamma_mat, 0)).value for j in mats)
    mu1 = max(matrix_measure(norm_on, variational_mode_matrix(j, k, lam, gamma_mat, 1)).value for j in mats)
    bounds = SyncBounds(
        lambda2=lam,
        mu0=mu0,
        mu1=mu1,
        beta01=resolve_beta(norm_off, norm_on).value,
        beta10=resolve_beta(norm_on, norm_off).value,
        coupling_measure=matrix_measure(norm_on, -gamma_mat).value,
        duty_off=duty_off,
    )
    logger.info(
        "Sync bounds: lambda2=%.6g mu0=%.6g mu1=%.6g beta01=%.6g beta10=%.6g",
        bounds.lambda2,
        bounds.mu0,
        bounds.mu1,
        bounds.beta01,
        bounds.beta10,
    )
    return bounds


def chua_sync_bounds(
    graph: Graph,
    params: ChuaParams | None = None,
    k: float = 1.0,
    weights: Sequence[float] = CHUA_OFF_WEIGHTS,
    duty_off: float = 0.25,
) -> SyncBounds:
    """Sync bounds for Chua nodes: weighted-1 norm when off, Euclidean when on, Gamma = I."""
    params = params or ChuaParams()
    return sync_bounds(
        chua_jacobian_slopes(params),
        graph,
        norm_off=WeightedLpNorm(p=1, weights=list(weights), label="weighted-1"),
        norm_on=WeightedLpNorm.unweighted(2, 3, label="euclidean"),
        k=k,
        duty_off=duty_off,
    )
