"""Switched-system simulation and trajectory analysis."""

from .analysis import (
    CoppelAudit,
    DivergenceResult,
    PeriodicOrbitReport,
    active_norm_values,
    coppel_audit,
    fit_rate,
    monodromy_rate,
    pair_divergence,
    periodic_orbit_check,
    run_pair_batch,
    spectral_radius_bound,
)
from .integrator import (
    DEFAULT_DT,
    FunctionMode,
    LinearMode,
    Mode,
    SwitchedSystem,
    Trajectory,
    finite_difference_jacobian,
    simulate,
)

__all__ = [
    # Systems
    "DEFAULT_DT",
    "FunctionMode",
    "LinearMode",
    "Mode",
    "SwitchedSystem",
    "Trajectory",
    "finite_difference_jacobian",
    "simulate",
    # Analysis
    "CoppelAudit",
    "DivergenceResult",
    "PeriodicOrbitReport",
    "active_norm_values",
    "coppel_audit",
    "fit_rate",
    "monodromy_rate",
    "pair_divergence",
    "periodic_orbit_check",
    "run_pair_batch",
    "spectral_radius_bound",
]
