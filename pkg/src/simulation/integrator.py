"""Switched systems and the switch-aligned RK4 integrator."""

from __future__ import annotations

import logging
import math
from abc import ABC, abstractmethod
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from ..errors import Diverged, InvalidInput
from ..matcore import Mat, Vec, as_matrix, as_vector
from ..models.signal import SwitchingSignal
from ..switchsig import iter_pieces, value_at

logger = logging.getLogger(__name__)

type VectorField = Callable[[float, np.ndarray], np.ndarray]
type JacobianField = Callable[[float, np.ndarray], np.ndarray]

DEFAULT_DT = 1e-3
DIVERGENCE_GUARD = 1e12

# Jacobian validation by central differences
FD_STEP = 1e-6
FD_TOL = 1e-5
FD_PROBES = 3


class Mode(ABC):
    """One mode of a switched system: a vector field and its Jacobian."""

    @property
    @abstractmethod
    def dim(self) -> int:
        """State dimension."""

    @abstractmethod
    def field(self, t: float, x: np.ndarray) -> np.ndarray:
        """Vector field; accepts states with leading batch axes."""

    @abstractmethod
    def jacobian(self, t: float, x: np.ndarray) -> Mat:
        """Jacobian of the field at a single state."""


class LinearMode(Mode):
    """Affine mode x' = A x + B."""

    def __init__(self, a: npt.ArrayLike, b: npt.ArrayLike | None = None) -> None:
        self.a = as_matrix(a, "A")
        if self.a.shape[0] != self.a.shape[1]:
            raise InvalidInput(f"A must be square, got {self.a.shape}")
        n = self.a.shape[0]
        self.b = np.zeros(n) if b is None else as_vector(b, "B")
        if self.b.shape != (n,):
            raise InvalidInput(f"B must have length {n}, got {self.b.shape[0]}")

    @property
    def dim(self) -> int:
        return self.a.shape[0]

    @property
    def homogeneous(self) -> LinearMode:
        return LinearMode(self.a)

    def field(self, t: float, x: np.ndarray) -> np.ndarray:
        return x @ self.a.T + self.b

    def jacobian(self, t: float, x: np.ndarray) -> Mat:
        return self.a


class FunctionMode(Mode):
    """Mode given by user callables f(t, x) and J(t, x)."""

    def __init__(self, dim: int, field: VectorField, jacobian: JacobianField) -> None:
        if dim < 1:
            raise InvalidInput(f"dimension must be positive, got {dim}")
        self._dim = dim
        self._field = field
        self._jacobian = jacobian

    @property
    def dim(self) -> int:
        return self._dim

    def field(self, t: float, x: np.ndarray) -> np.ndarray:
        return np.asarray(self._field(t, x), dtype=np.float64)

    def jacobian(self, t: float, x: np.ndarray) -> Mat:
        return np.asarray(self._jacobian(t, x), dtype=np.float64)


def finite_difference_jacobian(mode: Mode, t: float, x: Vec, step: float = FD_STEP) -> Mat:
    """Central-difference Jacobian of a mode's field."""
    n = x.shape[0]
    out = np.empty((n, n))
    for j in range(n):
        e = np.zeros(n)
        e[j] = step
        out[:, j] = (mode.field(t, x + e) - mode.field(t, x - e)) / (2.0 * step)
    return out


class SwitchedSystem:
    """Collection of modes sharing one state dimension.

    Jacobians are checked against central differences on random probes
    when the system is built.
    """

    def __init__(
        self,
        modes: Mapping[int, Mode],
        *,
        validate: bool = True,
        probe_scale: float = 0.5,
        seed: int = 0,
    ) -> None:
        """Initialize the system.

        Args:
            modes: Mode id to mode.
            validate: Check Jacobians by finite differences.
            probe_scale: Standard deviation of the random probe states.
            seed: Seed for the probe states.

        Raises:
            InvalidInput: On an empty mode set, mixed dimensions or a Jacobian mismatch.
        """
        if not modes:
            raise InvalidInput("a switched system needs at least one mode")
        dims = {mode.dim for mode in modes.values()}
        if len(dims) != 1:
            raise InvalidInput(f"modes have different dimensions: {sorted(dims)}")
        self.modes: dict[int, Mode] = dict(modes)
        self.dim = dims.pop()
        if validate:
            self._validate_jacobians(probe_scale, seed)
        logger.debug("Initialized SwitchedSystem with %d modes (n=%d)", len(self.modes), self.dim)

    def _validate_jacobians(self, probe_scale: float, seed: int) -> None:
        rng = np.random.Generator(np.random.Philox(seed))
        for mode_id, mode in self.modes.items():
            for _ in range(FD_PROBES):
                x = probe_scale * rng.standard_normal(self.dim)
                analytic = mode.jacobian(0.0, x)
                numeric = finite_difference_jacobian(mode, 0.0, x)
                if analytic.shape != (self.dim, self.dim):
                    raise InvalidInput(f"mode {mode_id} Jacobian has shape {analytic.shape}")
                error = float(np.max(np.abs(analytic - numeric)))
                scale = 1.0 + float(np.max(np.abs(analytic)))
                if error > FD_TOL * scale:
                    raise InvalidInput(
                        f"mode {mode_id} Jacobian disagrees with finite differences "
                        f"(max error {error:.3e})"
                    )

    def mode(self, mode_id: int) -> Mode:
        try:
            return self.modes[mode_id]
        except KeyError:
            raise InvalidInput(f"signal uses undeclared mode {mode_id}") from None


@dataclass
class Trajectory:
    """Samples of a switched trajectory; every switch instant is a sample."""

    times: np.ndarray
    states: np.ndarray
    modes: np.ndarray
    dt: float
    method: str = "rk4"
    diverged: bool = False
    meta: dict[str, object] = field(default_factory=dict)

    @property
    def final_state(self) -> Vec:
        return self.states[-1]

    @property
    def dim(self) -> int:
        return int(self.states.shape[1])

    def __len__(self) -> int:
        return int(self.times.shape[0])


def _rk4_step(mode: Mode, t: float, x: np.ndarray, h: float) -> np.ndarray:
    k1 = mode.field(t, x)
    k2 = mode.field(t + 0.5 * h, x + 0.5 * h * k1)
    k3 = mode.field(t + 0.5 * h, x + 0.5 * h * k2)
    k4 = mode.field(t + h, x + h * k3)
    return x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def _piece_grid(a: float, b: float, dt: float) -> list[float]:
    """Sample times in (a, b]: steps of dt from a, last step truncated at b."""
    n_full = int(math.floor((b - a) / dt))
    grid = [a + k * dt for k in range(1, n_full + 1)]
    if grid and b - grid[-1] <= 1e-9 * dt:
        grid[-1] = b
    else:
        grid.append(b)
    return grid


def simulate(
    system: SwitchedSystem,
    signal: SwitchingSignal,
    x0: npt.ArrayLike,
    t0: float,
    tf: float,
    dt: float = DEFAULT_DT,
) -> Trajectory:
    """Integrate x' = f(x, r(t)) with fixed-step RK4 aligned to the switch instants.

    The state is continuous across switches; the sample at a switch
    instant carries the new mode.

    Raises:
        InvalidInput: On bad dt, time range or initial state.
        Diverged: If the state norm exceeds 1e12 (partial trajectory attached).
    """
    if not dt > 0.0:
        raise InvalidInput(f"dt must be positive, got {dt}")
    if not tf > t0:
        raise InvalidInput(f"tf={tf:g} must exceed t0={t0:g}")
    x = as_vector(x0, "x0")
    if x.shape[0] != system.dim:
        raise InvalidInput(f"x0 has length {x.shape[0]}, system dimension is {system.dim}")

    pieces = list(iter_pieces(signal, t0, tf))
    times: list[float] = [t0]
    states: list[np.ndarray] = [x.copy()]
    modes: list[int] = [pieces[0][2]]
    logger.debug("Simulating %d pieces over [%g, %g] with dt=%g", len(pieces), t0, tf, dt)

    def partial() -> Trajectory:
        return Trajectory(
            times=np.array(times),
            states=np.array(states),
            modes=np.array(modes, dtype=np.int64),
            dt=dt,
            diverged=True,
        )

    for index, (a, b, mode_id) in enumerate(pieces):
        mode = system.mode(mode_id)
        next_mode = pieces[index + 1][2] if index + 1 < len(pieces) else value_at(signal, tf)
        t = a
        for t_next in _piece_grid(a, b, dt):
            x = _rk4_step(mode, t, x, t_next - t)
            magnitude = float(np.linalg.norm(x))
            t = t_next
            times.append(t)
            states.append(x)
            modes.append(next_mode if t_next == b else mode_id)
            if not math.isfinite(magnitude) or magnitude > DIVERGENCE_GUARD:
                raise Diverged(t, magnitude, partial())

    return Trajectory(
        times=np.array(times),
        states=np.array(states),
        modes=np.array(modes, dtype=np.int64),
        dt=dt,
    )
