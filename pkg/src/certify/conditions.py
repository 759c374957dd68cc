"""Averaged contraction conditions for switched systems."""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence

from ..errors import InvalidInput
from ..models.certificate import (
    Certificate,
    CertificateKind,
    ModeBounds,
    WindowBreakdown,
    pair_key,
)
from ..models.signal import DwellStats, SwitchingSignal
from ..switchsig import dwell_stats, iter_pieces, switch_instants
from .window import window_sup

logger = logging.getLogger(__name__)

# Default T_max for periodic signals, in periods
DEFAULT_PERIODS = 100

# Default T0 for finite signals, as a fraction of the horizon
DEFAULT_T0_FRACTION = 0.01


def certify_general(
    alpha_profile: Sequence[tuple[float, float]],
    log_beta_events: Sequence[tuple[float, float]],
    t0: float,
    T0: float,
    T_max: float,
    c_min: float = 0.0,
) -> Certificate:
    """Evaluate the general averaged condition for a piecewise-constant alpha(t).

    c = -sup over T in (T0, T_max] of (1/T)[int alpha + sum log beta_j].

    Args:
        alpha_profile: (start time, alpha) breakpoints covering t0.
        log_beta_events: (time, log beta_j) at norm switches.
        t0: Initial time.
        T0: Smallest window length.
        T_max: Largest window length.
        c_min: Required rate.

    Raises:
        InvalidInput: On an empty profile or an invalid window range.
    """
    sup = window_sup(alpha_profile, log_beta_events, t0, T0, T_max)
    breakdown = WindowBreakdown(
        T=sup.T,
        alpha_term=sup.alpha_term,
        log_beta_term=sup.log_beta_term,
        left_limit=sup.left_limit,
    )
    return Certificate.from_rate(
        CertificateKind.GENERAL,
        -breakdown.average,
        c_min,
        window=(T0, T_max),
        breakdown=breakdown,
    )


def _window_terms(bounds: ModeBounds, stats: DwellStats) -> tuple[float, float]:
    alpha_term = math.fsum(bounds.alpha_for(k) * d for k, d in stats.durations.items())
    log_beta_term = math.fsum(
        n * math.log(bounds.beta_for(k, l)) for (k, l), n in stats.transitions.items()
    )
    return alpha_term, log_beta_term


def _breakdown(bounds: ModeBounds, stats: DwellStats, T: float, left_limit: bool) -> WindowBreakdown:
    alpha_term, log_beta_term = _window_terms(bounds, stats)
    return WindowBreakdown(
        T=T,
        alpha_term=alpha_term,
        log_beta_term=log_beta_term,
        left_limit=left_limit,
        durations=dict(sorted(stats.durations.items())),
        transitions={pair_key(k, l): n for (k, l), n in sorted(stats.transitions.items())},
    )


def certify_staircase(
    bounds: ModeBounds,
    signal: SwitchingSignal,
    t0: float | None = None,
    T0: float | None = None,
    T_max: float | None = None,
    c_min: float = 0.0,
) -> Certificate:
    """Evaluate the finite-mode condition over a staircase schedule.

    For periodic signals the single-period rate is also reported as the
    asymptotic rate.

    Args:
        bounds: Per-mode alpha and per-switch beta.
        signal: Switching schedule.
        t0: Initial time (defaults to the signal start).
        T0: Smallest window (default: one period, or 1% of a finite horizon).
        T_max: Largest window (default: 100 periods, or the finite horizon).
        c_min: Required rate.

    Raises:
        MissingBound: If a mode or switch occurring in the window has no bound.
        InvalidInput: On a non-positive beta or an invalid window range.
    """
    start = signal.t0 if t0 is None else t0
    if signal.periodic:
        T0 = signal.period if T0 is None else T0
        T_max = DEFAULT_PERIODS * signal.period if T_max is None else T_max
    else:
        horizon = signal.end - start
        T0 = DEFAULT_T0_FRACTION * horizon if T0 is None else T0
        T_max = horizon if T_max is None else T_max
    if not (T0 > 0.0 and T_max > T0):
        raise InvalidInput(f"need T_max > T0 > 0, got T0={T0:g}, T_max={T_max:g}")

    stop = start + T_max
    alpha_profile = [(a, bounds.alpha_for(mode)) for a, _, mode in iter_pieces(signal, start, stop)]
    events = [
        (t, math.log(bounds.beta_for(k, l))) for t, k, l in switch_instants(signal, start, stop)
    ]
    logger.debug(
        "Certifying staircase over (%g, %g] with %d switches", start, stop, len(events)
    )

    sup = window_sup(alpha_profile, events, start, T0, T_max)
    stats = dwell_stats(signal, start, start + sup.T, include_end=not sup.left_limit)
    breakdown = _breakdown(bounds, stats, sup.T, sup.left_limit)

    kind = CertificateKind.STAIRCASE
    asymptotic_rate: float | None = None
    period_breakdown: WindowBreakdown | None = None
    if signal.periodic:
        kind = CertificateKind.PERIODIC
        period_stats = dwell_stats(signal, start, start + signal.period)
        period_breakdown = _breakdown(bounds, period_stats, signal.period, False)
        asymptotic_rate = -period_breakdown.average

    notes = [f"beta {key}: {source}" for key, source in sorted(bounds.sources.items())]
    return Certificate.from_rate(
        kind,
        -breakdown.average,
        c_min,
        window=(T0, T_max),
        breakdown=breakdown,
        asymptotic_rate=asymptotic_rate,
        period_breakdown=period_breakdown,
        notes=notes,
    )


def certify_ltv_two_mode(
    mu1: float,
    mu2: float,
    beta12: float,
    beta21: float,
    phi_r: float,
    dwell: float | None = None,
    c_min: float = 0.0,
) -> Certificate:
    """Two-mode condition with switching frequency phi_r.

    Evaluates the printed closed form -(1/2)[mu1 + mu2 + phi_r (log beta12 + log beta21)]
    and the equal-dwell periodic staircase it is meant to summarise. The
    staircase value is the certificate rate; both go into ``rates``.

    Args:
        mu1: Measure bound of mode 1.
        mu2: Measure bound of mode 2.
        beta12: Coefficient applied at 1 -> 2 switches.
        beta21: Coefficient applied at 2 -> 1 switches.
        phi_r: Switching frequency.
        dwell: Dwell per mode (default 1 / (2 phi_r)).
        c_min: Required rate.

    Raises:
        InvalidInput: If a coefficient, the frequency or the dwell is not positive.
    """
    if beta12 <= 0.0 or beta21 <= 0.0:
        raise InvalidInput("transaction coefficients must be positive")
    if phi_r <= 0.0:
        raise InvalidInput(f"phi_r must be positive, got {phi_r}")
    dwell = 1.0 / (2.0 * phi_r) if dwell is None else dwell
    if dwell <= 0.0:
        raise InvalidInput(f"dwell must be positive, got {dwell}")

    literal = -0.5 * (mu1 + mu2 + phi_r * (math.log(beta12) + math.log(beta21)))
    signal = SwitchingSignal(segments=[(1, dwell), (2, dwell)], periodic=True)
    bounds = ModeBounds(alpha={1: mu1, 2: mu2}, beta={(1, 2): beta12, (2, 1): beta21})
    staircase = certify_staircase(bounds, signal, c_min=c_min)
    assert staircase.asymptotic_rate is not None
    rate = staircase.asymptotic_rate

    flags: list[str] = []
    if abs(literal - rate) > 1e-9:
        flags.append(
            f"printed two-mode formula gives {literal:.6g}, "
            f"equal-dwell staircase (dwell {dwell:g}s) gives {rate:.6g}"
        )
    return Certificate.from_rate(
        CertificateKind.LTV2,
        rate,
        c_min,
        window=staircase.window,
        breakdown=staircase.period_breakdown,
        asymptotic_rate=rate,
        period_breakdown=staircase.period_breakdown,
        rates={"literal": literal, "dwell_consistent": rate, "window_sup": staircase.c},
        flags=flags,
    )
