"""Synchronisation condition for blinking networks."""

from __future__ import annotations

import logging
import math

from ..errors import Infeasible, InvalidInput
from ..models.certificate import Certificate, CertificateKind, WindowBreakdown

logger = logging.getLogger(__name__)


def _validate(beta01: float, beta10: float, duty_off: float) -> None:
    if beta01 <= 0.0 or beta10 <= 0.0:
        raise InvalidInput("transaction coefficients must be positive")
    if not 0.0 <= duty_off < 1.0:
        raise InvalidInput(f"duty_off must lie in [0, 1), got {duty_off}")


def solve_min_period(
    mu0: float,
    mu1: float,
    beta01: float,
    beta10: float,
    duty_off: float,
    c_min: float = 0.0,
) -> float:
    """Smallest period T* such that every T > T* certifies rate c_min.

    Raises:
        Infeasible: If mu0 * duty_off + mu1 * (1 - duty_off) >= -c_min.
    """
    _validate(beta01, beta10, duty_off)
    denominator = -(mu0 * duty_off + mu1 * (1.0 - duty_off)) - c_min
    if denominator <= 0.0:
        raise Infeasible(
            f"averaged measure {mu0 * duty_off + mu1 * (1.0 - duty_off):.6g} "
            f"is not below -c_min={-c_min:.6g}; no period certifies"
        )
    switch_cost = math.log(beta01) + math.log(beta10)
    return max(switch_cost, 0.0) / denominator


def sync_certify(
    mu0: float,
    mu1: float,
    beta01: float,
    beta10: float,
    duty_off: float,
    period: float,
    c_min: float = 0.0,
    *,
    coupling_verified: bool,
) -> Certificate:
    """Per-period rate of the transverse dynamics for an on/off coupling schedule.

    Mode 0 (coupling off) is active for duty_off * T, mode 1 for the rest,
    with one switch each way per period.

    Args:
        mu0: Measure bound with coupling off.
        mu1: Measure bound with coupling on.
        beta01: Coefficient at 0 -> 1 switches.
        beta10: Coefficient at 1 -> 0 switches.
        duty_off: Fraction of the period without coupling.
        period: Switching period T.
        c_min: Required rate.
        coupling_verified: Caller asserts mu1(-Gamma) <= 0.

    Raises:
        InvalidInput: If the coupling precondition is not asserted or inputs are out of range.
    """
    if not coupling_verified:
        raise InvalidInput("the coupling condition mu(-Gamma) <= 0 must be verified first")
    _validate(beta01, beta10, duty_off)
    if period <= 0.0:
        raise InvalidInput(f"period must be positive, got {period}")

    off_time = duty_off * period
    on_time = period - off_time
    breakdown = WindowBreakdown(
        T=period,
        alpha_term=mu0 * off_time + mu1 * on_time,
        log_beta_term=math.log(beta01) + math.log(beta10),
        durations={0: off_time, 1: on_time},
        transitions={"0->1": 1, "1->0": 1},
    )
    c = -breakdown.average

    rates: dict[str, float] = {}
    flags: list[str] = []
    try:
        rates["min_period"] = solve_min_period(mu0, mu1, beta01, beta10, duty_off, c_min)
    except Infeasible as e:
        flags.append(str(e))
    logger.debug("Sync rate %.6g at period %g", c, period)

    return Certificate.from_rate(
        CertificateKind.SYNC,
        c,
        c_min,
        window=(period, period),
        breakdown=breakdown,
        asymptotic_rate=c,
        period_breakdown=breakdown,
        rates=rates,
        flags=flags,
    )
