"""Contraction certificates for switched systems with multiple norms."""

from .certify import certify_general, certify_ltv_two_mode, certify_staircase, sync_certify
from .errors import ContractionError
from .models import (
    BetaResult,
    Certificate,
    ModeBounds,
    QuadraticNorm,
    StructuredNorm,
    SwitchingSignal,
    WeightedLpNorm,
)
from .norms import matrix_measure, norm_eval
from .simulation import SwitchedSystem, pair_divergence, simulate
from .transact import beta_exact, resolve_beta

__version__ = "0.3.0"

__all__ = [
    # Norms
    "QuadraticNorm",
    "StructuredNorm",
    "WeightedLpNorm",
    "matrix_measure",
    "norm_eval",
    # Transaction coefficients
    "BetaResult",
    "beta_exact",
    "resolve_beta",
    # Certificates
    "Certificate",
    "ModeBounds",
    "SwitchingSignal",
    "certify_general",
    "certify_ltv_two_mode",
    "certify_staircase",
    "sync_certify",
    # Simulation
    "SwitchedSystem",
    "pair_divergence",
    "simulate",
    # Errors
    "ContractionError",
]
