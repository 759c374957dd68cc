"""Trajectory analysis: pair divergence, Coppel audits and periodic orbits."""

from __future__ import annotations

import asyncio
import logging
import math
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from ..errors import InvalidInput
from ..matcore import Mat, as_matrix, as_vector, eig_2x2, max_singular
from ..models.norms import AnyNormSpec
from ..models.signal import SwitchingSignal
from ..norms import matrix_measure, norm_eval_batch
from ..transact import resolve_beta
from .integrator import DEFAULT_DT, LinearMode, SwitchedSystem, Trajectory, simulate

logger = logging.getLogger(__name__)

# Relative error below which samples are dropped from the rate fit
FIT_FLOOR = 1e2 * float(np.finfo(np.float64).eps)

PERIODIC_TOL = 1e-5
MONODROMY_SQUARINGS = 6


@dataclass
class DivergenceResult:
    """Error between two trajectories driven by the same signal."""

    times: np.ndarray
    error: np.ndarray
    euclidean_error: np.ndarray
    fitted_rate: float
    fitted_rate_active: float
    trajectory_x: Trajectory
    trajectory_y: Trajectory

    @property
    def final_error(self) -> float:
        return float(self.error[-1])


@dataclass
class CoppelAudit:
    """Comparison of |x(t)| against exp(int alpha + sum log beta) * |x0|."""

    max_ratio: float
    tolerance: float
    violations: int
    measure_violations: dict[int, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.violations == 0 and not self.measure_violations


@dataclass
class PeriodicOrbitReport:
    period: float
    max_mismatch: float
    checked_samples: int
    passed: bool


def fit_rate(times: np.ndarray, error: np.ndarray) -> float:
    """Least-squares slope of ln(error) over the second half of the run.

    Samples whose error relative to the initial error falls below
    100 * machine epsilon are skipped. Returns -inf when fewer than two
    samples remain.
    """
    if error.shape[0] < 2 or error[0] <= 0.0:
        return -math.inf
    midpoint = times[0] + 0.5 * (times[-1] - times[0])
    mask = (times >= midpoint) & (error > FIT_FLOOR * error[0])
    if np.count_nonzero(mask) < 2:
        return -math.inf
    return float(np.polyfit(times[mask], np.log(error[mask]), 1)[0])


def active_norm_values(
    states: np.ndarray, modes: np.ndarray, norm_schedule: Mapping[int, AnyNormSpec]
) -> np.ndarray:
    """Norm of each sample in the norm of its active mode."""
    out = np.empty(states.shape[0])
    for mode in np.unique(modes):
        spec = norm_schedule.get(int(mode))
        if spec is None:
            raise InvalidInput(f"no norm given for mode {int(mode)}")
        mask = modes == mode
        out[mask] = norm_eval_batch(spec, states[mask])
    return out


def pair_divergence(
    system: SwitchedSystem,
    signal: SwitchingSignal,
    x0: npt.ArrayLike,
    y0: npt.ArrayLike,
    norm_schedule: Mapping[int, AnyNormSpec],
    t0: float,
    tf: float,
    dt: float = DEFAULT_DT,
) -> DivergenceResult:
    """Integrate two initial conditions and measure their separation.

    The error is taken in the norm of the active mode; the fitted rate
    uses the Euclidean error, which does not jump at norm switches.
    """
    tx = simulate(system, signal, x0, t0, tf, dt)
    ty = simulate(system, signal, y0, t0, tf, dt)
    diff = tx.states - ty.states
    error = active_norm_values(diff, tx.modes, norm_schedule)
    euclidean = np.linalg.norm(diff, axis=1)
    result = DivergenceResult(
        times=tx.times,
        error=error,
        euclidean_error=euclidean,
        fitted_rate=fit_rate(tx.times, euclidean),
        fitted_rate_active=fit_rate(tx.times, error),
        trajectory_x=tx,
        trajectory_y=ty,
    )
    logger.debug("Pair divergence: fitted rate %.6g", result.fitted_rate)
    return result


async def run_pair_batch(
    system: SwitchedSystem,
    signal: SwitchingSignal,
    pairs: Sequence[tuple[npt.ArrayLike, npt.ArrayLike]],
    norm_schedule: Mapping[int, AnyNormSpec],
    t0: float,
    tf: float,
    dt: float = DEFAULT_DT,
    max_concurrent: int = 4,
) -> list[DivergenceResult]:
    """Run pair_divergence for many initial pairs in worker threads."""
    semaphore = asyncio.Semaphore(max_concurrent)

    async def run_one(index: int, x0: npt.ArrayLike, y0: npt.ArrayLike) -> DivergenceResult:
        async with semaphore:
            logger.debug("Pair %d/%d started", index + 1, len(pairs))
            return await asyncio.to_thread(
                pair_divergence, system, signal, x0, y0, norm_schedule, t0, tf, dt
            )

    tasks = [run_one(i, x0, y0) for i, (x0, y0) in enumerate(pairs)]
    return list(await asyncio.gather(*tasks))


def coppel_audit(
    a_schedule: Mapping[int, npt.ArrayLike],
    signal: SwitchingSignal,
    alpha: Mapping[int, float],
    norm_schedule: Mapping[int, AnyNormSpec],
    x0: npt.ArrayLike,
    t0: float,
    tf: float,
    dt: float = DEFAULT_DT,
    beta: Mapping[tuple[int, int], float] | None = None,
) -> CoppelAudit:
    """Check the Coppel inequality along a simulated linear trajectory.

    At a switch k -> l the bound is multiplied by beta_kl; missing
    coefficients are resolved from the two norms.
    """
    matrices = {k: as_matrix(a, f"A({k})") for k, a in a_schedule.items()}
    measure_violations: dict[int, float] = {}
    for k, a in matrices.items():
        if k not in alpha:
            raise InvalidInput(f"no alpha given for mode {k}")
        if k not in norm_schedule:
            raise InvalidInput(f"no norm given for mode {k}")
        mu = matrix_measure(norm_schedule[k], a).value
        if alpha[k] < mu - 1e-12:
            measure_violations[k] = mu
            logger.warning("alpha(%d)=%.6g is below the measure %.6g", k, alpha[k], mu)

    system = SwitchedSystem({k: LinearMode(a) for k, a in matrices.items()})
    traj = simulate(system, signal, as_vector(x0, "x0"), t0, tf, dt)

    betas = dict(beta or {})
    exponent = np.empty(len(traj))
    exponent[0] = 0.0
    for i in range(1, len(traj)):
        previous, current = int(traj.modes[i - 1]), int(traj.modes[i])
        step = alpha[previous] * (traj.times[i] - traj.times[i - 1])
        if current != previous:
            step += math.log(_switch_beta(betas, norm_schedule, previous, current))
        exponent[i] = exponent[i - 1] + step

    norms = active_norm_values(traj.states, traj.modes, norm_schedule)
    bound = norms[0] * np.exp(exponent)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(bound > 0.0, norms / bound, np.where(norms > 0.0, np.inf, 1.0))
    tolerance = 1e-6 + 10.0 * dt**4
    violations = int(np.count_nonzero(ratio > 1.0 + tolerance))
    return CoppelAudit(
        max_ratio=float(np.max(ratio)),
        tolerance=tolerance,
        violations=violations,
        measure_violations=measure_violations,
    )


def _switch_beta(
    betas: dict[tuple[int, int], float],
    norm_schedule: Mapping[int, AnyNormSpec],
    k: int,
    l: int,
) -> float:
    if (k, l) not in betas:
        source, target = norm_schedule[k], norm_schedule[l]
        if source == target:
            betas[(k, l)] = 1.0
        else:
            betas[(k, l)] = resolve_beta(source, target).value
    return betas[(k, l)]


def periodic_orbit_check(
    system: SwitchedSystem,
    signal: SwitchingSignal,
    x0: npt.ArrayLike,
    n_transient: int,
    n_check: int,
    dt: float = DEFAULT_DT,
) -> PeriodicOrbitReport:
    """Check that a trajectory settles onto a T-periodic orbit.

    Compares x(t + T) with x(t) over n_check periods after n_transient
    periods have passed.
    """
    if not signal.periodic:
        raise InvalidInput("periodic_orbit_check needs a periodic signal")
    if n_transient < 0 or n_check < 1:
        raise InvalidInput("need n_transient >= 0 and n_check >= 1")
    period = signal.period
    t0 = signal.t0
    tf = t0 + (n_transient + n_check + 1) * period
    traj = simulate(system, signal, x0, t0, tf, dt)

    start = t0 + n_transient * period
    stop = t0 + (n_transient + n_check) * period
    candidates = np.nonzero((traj.times >= start) & (traj.times <= stop))[0]
    shifted = traj.times[candidates] + period
    right = np.clip(np.searchsorted(traj.times, shifted), 1, len(traj) - 1)
    left = right - 1
    nearer_left = np.abs(traj.times[left] - shifted) < np.abs(traj.times[right] - shifted)
    partners = np.where(nearer_left, left, right)
    aligned = np.abs(traj.times[partners] - shifted) <= 1e-9 * max(1.0, abs(tf))
    idx, partner = candidates[aligned], partners[aligned]
    if idx.size == 0:
        raise InvalidInput("no samples line up one period apart; use a dt dividing the dwell times")

    gap = np.linalg.norm(traj.states[partner] - traj.states[idx], axis=1)
    mismatch = gap / (1.0 + np.linalg.norm(traj.states[idx], axis=1))
    max_mismatch = float(np.max(mismatch))
    return PeriodicOrbitReport(
        period=period,
        max_mismatch=max_mismatch,
        checked_samples=int(idx.size),
        passed=max_mismatch <= PERIODIC_TOL,
    )


def spectral_radius_bound(phi: Mat) -> float:
    """Spectral radius of a square matrix.

    Exact for 2 x 2; otherwise the power bound ||Phi^(2^m)||^(1/2^m).
    """
    if phi.shape == (2, 2):
        return float(max(abs(v) for v in eig_2x2(phi)))
    log_scale = 0.0
    power = phi.copy()
    for m in range(MONODROMY_SQUARINGS):
        size = max_singular(power)
        if size == 0.0:
            return 0.0
        log_scale += math.log(size) / 2**m
        power = (power / size) @ (power / size)
    log_scale += math.log(max(max_singular(power), np.finfo(np.float64).tiny)) / 2**MONODROMY_SQUARINGS
    return math.exp(log_scale)


def monodromy_rate(
    system: SwitchedSystem, signal: SwitchingSignal, dt: float = DEFAULT_DT
) -> float:
    """Floquet exponent ln(rho(Phi(T))) / T of a periodic linear switched system.

    Negative when the system contracts; comparable with fitted rates.

    The monodromy matrix Phi(T) is built column by column from simulated
    basis vectors; affine terms are dropped.
    """
    if not signal.periodic:
        raise InvalidInput("monodromy_rate needs a periodic signal")
    linear: dict[int, LinearMode] = {}
    for k, mode in system.modes.items():
        if not isinstance(mode, LinearMode):
            raise InvalidInput(f"mode {k} is not linear")
        linear[k] = mode.homogeneous
    homogeneous = SwitchedSystem(linear, validate=False)

    n, period = system.dim, signal.period
    phi = np.empty((n, n))
    for j in range(n):
        e = np.zeros(n)
        e[j] = 1.0
        phi[:, j] = simulate(homogeneous, signal, e, signal.t0, signal.t0 + period, dt).final_state
    rho = spectral_radius_bound(phi)
    if rho == 0.0:
        return -math.inf
    return math.log(rho) / period
