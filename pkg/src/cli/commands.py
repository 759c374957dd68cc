"""Subcommand implementations: config in, JSON/CSV payload and exit code out."""

from __future__ import annotations

import logging
from collections.abc import Awaitable, Callable
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from ..certify import (
    certify_general,
    certify_ltv_two_mode,
    certify_staircase,
    solve_min_period,
    sync_certify,
)
from ..dynamics import (
    chua_jacobian_slopes,
    chua_mode,
    chua_sync_bounds,
    load_graph,
    load_shipped_graph,
)
from ..errors import Diverged, Infeasible, InvalidInput
from ..models.certificate import Certificate, ModeBounds, pair_key, parse_pair_key
from ..models.config import ChuaModeConfig, LinearModeConfig, RunConfig
from ..models.norms import AnyNormSpec, MeasureMethod, MeasureResult, WeightedLpNorm
from ..models.transaction import BetaResult
from ..norms import matrix_measure, measure_limit_oracle
from ..output import trajectory_csv
from ..simulation import LinearMode, Mode, SwitchedSystem, pair_divergence, simulate
from ..transact import prop4_bound, resolve_beta, sampled_sup
from .settings import CliSettings

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NOT_CERTIFIED = 2


@dataclass
class CommandResult:
    """What a subcommand produced; the app decides where it goes."""

    exit_code: int
    payload: Any
    csv: str | None = None


def build_mode(config: LinearModeConfig | ChuaModeConfig) -> Mode:
    match config:
        case LinearModeConfig():
            return LinearMode(config.A, config.B)
        case ChuaModeConfig():
            return chua_mode(config.params)


def build_system(config: RunConfig) -> SwitchedSystem:
    return SwitchedSystem({k: build_mode(m) for k, m in config.modes.items()})


def scheduled_norm(config: RunConfig, mode: int) -> tuple[str, AnyNormSpec]:
    name = config.norm_schedule.get(mode)
    if name is None:
        raise InvalidInput(f"no norm scheduled for mode {mode}")
    return name, config.norms[name]


def mode_measure(config: RunConfig, mode: int, spec: AnyNormSpec, label: str) -> MeasureResult:
    """Measure of a mode's matrix, or the max over the Chua Jacobian's two values."""
    mode_config = config.modes.get(mode)
    if mode_config is None:
        raise InvalidInput(f"unknown mode {mode}")
    match mode_config:
        case LinearModeConfig():
            result = matrix_measure(spec, mode_config.matrix)
        case ChuaModeConfig():
            results = [matrix_measure(spec, j) for j in chua_jacobian_slopes(mode_config.params)]
            result = max(results, key=lambda r: r.value)
    return result.model_copy(update={"norm": label})


def cmd_measure(config: RunConfig, settings: CliSettings) -> CommandResult:
    assert config.measure is not None
    options = config.measure
    name = options.norm or config.norm_schedule[options.mode]
    spec = config.norms[name]
    result = mode_measure(config, options.mode, spec, name)
    payload: dict[str, Any] = {"mode": options.mode, "norm": name, "result": result}
    if options.oracle_h is not None:
        mode_config = config.modes[options.mode]
        if not isinstance(mode_config, LinearModeConfig):
            raise InvalidInput("the limit oracle needs a linear mode")
        payload["oracle"] = MeasureResult(
            value=measure_limit_oracle(spec, mode_config.matrix, options.oracle_h),
            method=MeasureMethod.LIMIT_ORACLE,
            norm=name,
        )
    logger.info("Measure of mode %d under %s: %.6g", options.mode, name, result.value)
    return CommandResult(EXIT_OK, payload)


def _prop4_entry(source: AnyNormSpec, target: AnyNormSpec, variant: str) -> BetaResult | None:
    """Exponent-change bound for two weighted Lp norms with different exponents."""
    if not (isinstance(source, WeightedLpNorm) and isinstance(target, WeightedLpNorm)):
        return None
    if source.p == target.p:
        return None
    if source.p > target.p:
        # |x|_target <= beta |x|_source with source the larger exponent
        return prop4_bound(source.p, source.weights, target.p, target.weights, 2, variant)
    return prop4_bound(target.p, target.weights, source.p, source.weights, 1, variant)


def cmd_beta(config: RunConfig, settings: CliSettings) -> CommandResult:
    assert config.beta is not None
    options = config.beta
    source, target = config.norms[options.source], config.norms[options.target]
    result = resolve_beta(source, target)
    payload: dict[str, Any] = {"source": options.source, "target": options.target, "result": result}
    prop4 = _prop4_entry(source, target, options.variant.value)
    if prop4 is not None:
        payload["prop4"] = prop4
    if options.samples:
        payload["sampled"] = sampled_sup(source, target, options.samples, seed=settings.seed)
    logger.info("beta %s -> %s = %.6g (%s)", options.source, options.target, result.value, result.kind.value)
    return CommandResult(EXIT_OK, payload)


def _switch_pairs(config: RunConfig) -> set[tuple[int, int]]:
    assert config.signal is not None
    segments = config.signal.segments
    pairs = {(a[0], b[0]) for a, b in zip(segments, segments[1:])}
    if config.signal.periodic and segments[-1][0] != segments[0][0]:
        pairs.add((segments[-1][0], segments[0][0]))
    return pairs


def mode_bounds(config: RunConfig, modes: list[int], pairs: set[tuple[int, int]]) -> ModeBounds:
    """alpha and beta for the given modes and switches; config overrides win."""
    assert config.certify is not None
    options = config.certify
    alpha: dict[int, float] = {}
    for mode in modes:
        if mode in options.alpha:
            alpha[mode] = options.alpha[mode]
        else:
            name, spec = scheduled_norm(config, mode)
            alpha[mode] = mode_measure(config, mode, spec, name).value

    overrides = {parse_pair_key(key): value for key, value in options.beta.items()}
    computed: dict[tuple[int, int], BetaResult] = {}
    for k, l in sorted(pairs):
        if (k, l) in overrides:
            continue
        name_k, spec_k = scheduled_norm(config, k)
        name_l, spec_l = scheduled_norm(config, l)
        if name_k != name_l:
            computed[(k, l)] = resolve_beta(spec_k, spec_l)

    bounds = ModeBounds.from_results(alpha, computed, dict(config.norm_schedule))
    beta = dict(bounds.beta)
    sources = dict(bounds.sources)
    for (k, l), value in overrides.items():
        beta[pair_key(k, l)] = value
        sources[pair_key(k, l)] = "config"
    return bounds.model_copy(update={"beta": beta, "sources": sources})


def cmd_certify(config: RunConfig, settings: CliSettings) -> CommandResult:
    assert config.certify is not None
    options = config.certify
    certificate: Certificate
    match options.method:
        case "staircase":
            assert config.signal is not None
            bounds = mode_bounds(config, config.signal.modes, _switch_pairs(config))
            certificate = certify_staircase(
                bounds, config.signal, options.t0, options.T0, options.T_max, options.c_min
            )
        case "ltv2":
            assert options.phi_r is not None
            bounds = mode_bounds(config, [1, 2], {(1, 2), (2, 1)})
            certificate = certify_ltv_two_mode(
                bounds.alpha_for(1),
                bounds.alpha_for(2),
                bounds.beta_for(1, 2),
                bounds.beta_for(2, 1),
                options.phi_r,
                options.dwell,
                options.c_min,
            )
        case "general":
            assert options.profile is not None and options.T0 is not None and options.T_max is not None
            certificate = certify_general(
                options.profile.alpha,
                options.profile.log_beta_events,
                options.t0 if options.t0 is not None else options.profile.alpha[0][0],
                options.T0,
                options.T_max,
                options.c_min,
            )
    logger.info("Certificate (%s): c=%.6g satisfied=%s", certificate.kind.value, certificate.c, certificate.satisfied)
    return CommandResult(EXIT_OK if certificate.satisfied else EXIT_NOT_CERTIFIED, certificate)


def cmd_simulate(config: RunConfig, settings: CliSettings) -> CommandResult:
    assert config.simulate is not None and config.signal is not None
    options = config.simulate
    dt = options.dt or settings.dt
    system = build_system(config)
    try:
        if options.y0 is None:
            trajectory = simulate(system, config.signal, options.x0, options.t0, options.tf, dt)
            summary: dict[str, Any] = {"samples": len(trajectory), "dt": dt, "diverged": False}
            return CommandResult(EXIT_OK, summary, trajectory_csv(trajectory, settings.float_digits))

        norms = {mode: config.norms[name] for mode, name in config.norm_schedule.items()}
        result = pair_divergence(
            system, config.signal, options.x0, options.y0, norms, options.t0, options.tf, dt
        )
    except Diverged as e:
        logger.error("%s", e)
        summary = {"diverged": True, "t": e.t, "magnitude": e.magnitude, "dt": dt}
        return CommandResult(EXIT_ERROR, summary, trajectory_csv(e.trajectory, settings.float_digits))

    summary = {
        "samples": len(result.times),
        "dt": dt,
        "diverged": False,
        "initial_error": float(result.error[0]),
        "final_error": result.final_error,
        "fitted_rate": result.fitted_rate,
        "fitted_rate_active": result.fitted_rate_active,
    }
    logger.info("Fitted rate %.6g over [%g, %g]", result.fitted_rate, options.t0, options.tf)
    return CommandResult(EXIT_OK, summary, trajectory_csv(result.trajectory_x, settings.float_digits))


def _default_period(min_period: float) -> float:
    # Twice the threshold, or one second when every period certifies
    return 2.0 * min_period if min_period > 0.0 else 1.0


async def cmd_sync(config: RunConfig, settings: CliSettings) -> CommandResult:
    assert config.sync is not None
    options = config.sync
    payload: dict[str, Any] = {}
    if options.network is not None:
        network = options.network
        graph = await (load_shipped_graph() if network.graph == "shipped" else load_graph(Path(network.graph)))
        bounds = chua_sync_bounds(graph, network.chua, network.k, network.weights, options.duty_off)
        payload["bounds"] = bounds
        mu0, mu1, beta01, beta10 = bounds.mu0, bounds.mu1, bounds.beta01, bounds.beta10
        verified = bounds.coupling_verified
    else:
        assert options.mu0 is not None and options.mu1 is not None
        assert options.beta01 is not None and options.beta10 is not None
        mu0, mu1, beta01, beta10 = options.mu0, options.mu1, options.beta01, options.beta10
        verified = options.coupling_verified

    period = options.period
    if period is None:
        try:
            period = _default_period(
                solve_min_period(mu0, mu1, beta01, beta10, options.duty_off, options.c_min)
            )
        except Infeasible as e:
            logger.warning("%s", e)
            period = 1.0
    certificate = sync_certify(
        mu0, mu1, beta01, beta10, options.duty_off, period, options.c_min, coupling_verified=verified
    )
    payload["period"] = period
    payload["certificate"] = certificate
    logger.info("Sync certificate at T=%g: c=%.6g", period, certificate.c)
    return CommandResult(EXIT_OK if certificate.satisfied else EXIT_NOT_CERTIFIED, payload)


Command = Callable[[RunConfig, CliSettings], CommandResult | Awaitable[CommandResult]]

COMMANDS: dict[str, tuple[str, Command]] = {
    "measure": ("measure", cmd_measure),
    "beta": ("beta", cmd_beta),
    "certify": ("certify", cmd_certify),
    "simulate": ("simulate", cmd_simulate),
    "sync": ("sync", cmd_sync),
}
