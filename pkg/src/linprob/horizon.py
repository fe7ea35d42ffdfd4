"""Projecting a trial's result to other treatment durations.

The control event rate is modelled as a constant hazard, fitted from the
trial's observed control rate and duration. The trial's Impact is assumed
to hold at every horizon, a strong clinical assumption the caller should
keep in mind.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Impact, Weight, prob_to_weight, weight_to_prob
from .errors import DomainError, ZeroImpactError


@dataclass(frozen=True)
class HorizonProjection:
    tau: float
    horizon: float
    control_rate: float
    control_weight: Weight
    treated_weight: Weight
    treated_rate: float
    arr: float


@dataclass(frozen=True)
class MaximalEffect:
    impact: Impact
    rate_half_control: float
    rate_half_treated: float
    arr_maximal: float
    nnt_maximal: float


def _check_positive(value, name):
    if not (value > 0.0) or math.isinf(value):
        raise DomainError(f"{name} must be positive and finite, got {value!r}")


def fit_tau(control_rate: float, duration: float) -> float:
    """Exponential time constant ``-duration / ln(1 - control_rate)``."""
    if not (0.0 < control_rate < 1.0):
        raise DomainError(f"control rate must lie strictly between 0 and 1, got {control_rate!r}")
    _check_positive(duration, "duration")
    return -duration / math.log1p(-control_rate)


def control_rate_at(tau: float, horizon: float) -> float:
    return -math.expm1(-horizon / tau)


def project(impact: Impact, tau: float, horizon: float) -> HorizonProjection:
    """Control and treated event rates after ``horizon`` years."""
    _check_positive(tau, "tau")
    _check_positive(horizon, "horizon")
    if not math.isfinite(impact):
        raise DomainError(f"impact must be finite, got {impact!r}")
    control_rate = control_rate_at(tau, horizon)
    if not (0.0 < control_rate < 1.0):
        raise DomainError(
            f"horizon/tau ratio {horizon / tau:g} gives a control rate of exactly 0 or 1"
        )
    control_weight = prob_to_weight(control_rate)
    treated_weight = control_weight + impact
    # skip the round trip when nothing changes so ARR is exactly 0
    treated_rate = control_rate if impact == 0.0 else weight_to_prob(treated_weight)
    return HorizonProjection(
        tau=tau,
        horizon=horizon,
        control_rate=control_rate,
        control_weight=control_weight,
        treated_weight=treated_weight,
        treated_rate=treated_rate,
        arr=control_rate - treated_rate,
    )


def maximal_effect(impact: Impact) -> MaximalEffect:
    """Largest possible absolute rate change for ``impact`` and its NNT.

    The change is largest when the Weight moves from ``-I/2`` to ``+I/2``,
    i.e. symmetrically about a 50% rate.
    """
    if not math.isfinite(impact):
        raise DomainError(f"impact must be finite, got {impact!r}")
    if impact == 0.0:
        raise ZeroImpactError("impact is zero: no rate change, NNT undefined")
    control = weight_to_prob(-impact / 2.0)
    treated = weight_to_prob(impact / 2.0)
    arr = abs(control - treated)
    return MaximalEffect(
        impact=impact,
        rate_half_control=control,
        rate_half_treated=treated,
        arr_maximal=arr,
        nnt_maximal=1.0 / arr,
    )
