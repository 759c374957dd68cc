"""Exception hierarchy shared by every module."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .simulation.integrator import Trajectory


class ContractionError(Exception):
    """Base exception for all toolkit errors."""

    pass


class InvalidInput(ContractionError):
    """Raised when an argument violates a documented precondition."""

    pass


class NotPositiveDefinite(ContractionError):
    """Raised when a matrix expected to be SPD is not."""

    def __init__(self, min_eigenvalue: float, message: str = "") -> None:
        self.min_eigenvalue = min_eigenvalue
        detail = f": {message}" if message else ""
        super().__init__(
            f"Matrix is not positive definite (smallest eigenvalue {min_eigenvalue:.3e}){detail}"
        )


class UnsupportedNorm(ContractionError):
    """Raised for norm families or exponents without a closed form."""

    pass


class UnsupportedPair(ContractionError):
    """Raised when no exact transaction coefficient exists for a norm pair."""

    def __init__(self, source: str, target: str) -> None:
        self.source = source
        self.target = target
        super().__init__(f"No exact transaction coefficient for {source} -> {target}")


class OutOfDomain(ContractionError):
    """Raised when a time lies outside the coverage of a switching signal."""

    def __init__(self, t: float, message: str) -> None:
        self.t = t
        super().__init__(f"t={t:g} is out of domain: {message}")


class MissingBound(ContractionError):
    """Raised when a certificate needs an alpha or beta that was not supplied."""

    def __init__(self, key: int | tuple[int, int]) -> None:
        self.key = key
        if isinstance(key, tuple):
            what = f"transaction coefficient for switch {key[0]}->{key[1]}"
        else:
            what = f"measure bound for mode {key}"
        super().__init__(f"Missing {what}")


class Infeasible(ContractionError):
    """Raised when no parameter value can satisfy a condition."""

    pass


class Diverged(ContractionError):
    """Raised when a simulated state exceeds the divergence guard.

    The partial trajectory up to the offending sample is attached.
    """

    def __init__(self, t: float, magnitude: float, trajectory: Trajectory) -> None:
        self.t = t
        self.magnitude = magnitude
        self.trajectory = trajectory
        super().__init__(f"State norm {magnitude:.3e} exceeded guard at t={t:g}")


class UnsupportedGraph(ContractionError):
    """Raised for graphs outside the symmetric-Laplacian path."""

    pass


class ConfigError(ContractionError):
    """Raised when a run configuration fails validation."""

    def __init__(self, path: str, message: str) -> None:
        self.path = path
        super().__init__(f"Invalid config at {path or '<root>'}: {message}")
