"""Pydantic domain models."""

from .certificate import (
    Certificate,
    CertificateKind,
    ModeBounds,
    WindowBreakdown,
    pair_key,
    parse_pair_key,
)
from .chua import ChuaParams
from .config import (
    BetaOptions,
    CertifyOptions,
    ChuaModeConfig,
    GeneralProfile,
    LinearModeConfig,
    MeasureOptions,
    NetworkOptions,
    RunConfig,
    SimulateOptions,
    SyncOptions,
    dump_config,
    parse_config,
    parse_config_text,
)
from .norms import (
    NORM_SPEC_ADAPTER,
    AnyNormSpec,
    CrossNormResult,
    MeasureMethod,
    MeasureResult,
    NormSpec,
    QuadraticNorm,
    StructuredNorm,
    WeightedLpNorm,
    describe_norm,
    parse_norm_spec,
)
from .report import ReproReport, ReproRow, ReproStatus
from .signal import DwellStats, SwitchingSignal
from .transaction import BetaKind, BetaResult, Prop4Variant

__all__ = [
    # Norms
    "NORM_SPEC_ADAPTER",
    "AnyNormSpec",
    "CrossNormResult",
    "MeasureMethod",
    "MeasureResult",
    "NormSpec",
    "QuadraticNorm",
    "StructuredNorm",
    "WeightedLpNorm",
    "describe_norm",
    "parse_norm_spec",
    # Transaction coefficients
    "BetaKind",
    "BetaResult",
    "Prop4Variant",
    # Signals
    "DwellStats",
    "SwitchingSignal",
    # Certificates
    "Certificate",
    "CertificateKind",
    "ModeBounds",
    "WindowBreakdown",
    "pair_key",
    "parse_pair_key",
    # Configuration
    "BetaOptions",
    "CertifyOptions",
    "ChuaModeConfig",
    "ChuaParams",
    "GeneralProfile",
    "LinearModeConfig",
    "MeasureOptions",
    "NetworkOptions",
    "RunConfig",
    "SimulateOptions",
    "SyncOptions",
    "dump_config",
    "parse_config",
    "parse_config_text",
    # Reports
    "ReproReport",
    "ReproRow",
    "ReproStatus",
]
