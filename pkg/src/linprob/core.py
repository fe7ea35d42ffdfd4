"""Conversions between probability, odds and Weight, plus qualitative bands.

A Weight is the base-10 log of the odds of a probability. Impacts are
differences of Weights and Certainties are the Weight of a p-value, so all
three share one scale and plain floats are used for each.
"""

from __future__ import annotations

import enum
import math

from .errors import DomainError

# Aliases document intent in signatures; all are plain floats.
Weight = float
Impact = float
Certainty = float

IMPACT_THRESHOLDS = (0.1, 0.2, 0.4)
CERTAINTY_THRESHOLDS = (-0.4, -1.3, -2.0, -4.0, -9.0)

SIMILAR_CAVEAT = (
    "certainty-similar band assumes group assignment is agnostic "
    "(no designated control group)"
)


class ImpactBand(str, enum.Enum):
    LOW = "Low"
    INTERMEDIATE = "Intermediate"
    HIGH = "High"
    VERY_HIGH = "VeryHigh"


class CertaintyBand(str, enum.Enum):
    SIMILAR = "Similar"
    INDETERMINATE = "Indeterminate"
    MARGINALLY_DIFFERENT = "MarginallyDifferent"
    DIFFERENT = "Different"
    VERY_DIFFERENT = "VeryDifferent"
    VERY_DIFFERENT_PHYSICS_LEVEL = "VeryDifferentPhysicsLevel"


def _check_open_unit(p, name):
    if not (0.0 < p < 1.0):
        raise DomainError(f"{name} must lie strictly between 0 and 1, got {p!r}")


def odds(p: float) -> float:
    """Odds p/(1-p) of a probability strictly inside (0, 1)."""
    _check_open_unit(p, "probability")
    return p / (1.0 - p)


def prob_to_weight(p: float) -> Weight:
    """Return the Weight ``log10(p / (1 - p))``.

    Probabilities of exactly 0 or 1 have no finite Weight and raise
    :class:`DomainError`.

    >>> round(prob_to_weight(0.8), 3)
    0.602
    """
    _check_open_unit(p, "probability")
    return math.log10(p / (1.0 - p))


def weight_to_prob(w: Weight) -> float:
    """Inverse of :func:`prob_to_weight`: ``10**w / (1 + 10**w)``."""
    if not math.isfinite(w):
        raise DomainError(f"weight must be finite, got {w!r}")
    # evaluate on the side where 10**x cannot overflow
    if w >= 0.0:
        return 1.0 / (1.0 + 10.0 ** -w)
    t = 10.0 ** w
    return t / (1.0 + t)


def impact_between(w1: Weight, w2: Weight) -> Impact:
    """Impact of moving from ``w1`` to ``w2`` (``w2 - w1``)."""
    return w2 - w1


def certainty_from_p(p: float) -> Certainty:
    """Certainty of a p-value, ``log10(p / (1 - p))``."""
    _check_open_unit(p, "p-value")
    return math.log10(p / (1.0 - p))


def p_from_certainty(c: Certainty) -> float:
    """p-value corresponding to a Certainty."""
    return weight_to_prob(c)


def certainty_of_test(p: float) -> Certainty:
    """Certainty reported for a two-sided test result.

    Same as :func:`certainty_from_p` except that p is capped at 0.5: a
    two-sided p above even odds carries no evidence of a difference, so the
    Certainty is reported as 0 rather than positive (and p = 1, from a zero
    test statistic, maps to 0 instead of infinity).
    """
    if not (0.0 < p <= 1.0):
        raise DomainError(f"p-value must lie in (0, 1], got {p!r}")
    return certainty_from_p(min(p, 0.5))


def classify_impact(i: Impact) -> ImpactBand:
    """Band for an Impact by magnitude; a threshold value goes to the higher band."""
    if not math.isfinite(i):
        raise DomainError(f"impact must be finite, got {i!r}")
    mag = abs(i)
    low, mid, high = IMPACT_THRESHOLDS
    if mag < low:
        return ImpactBand.LOW
    if mag < mid:
        return ImpactBand.INTERMEDIATE
    if mag < high:
        return ImpactBand.HIGH
    return ImpactBand.VERY_HIGH


def classify_certainty(c: Certainty) -> CertaintyBand:
    """Band for a Certainty; a threshold value goes to the more certain band.

    So C = -1.3 exactly is MarginallyDifferent and C = -0.4 is Indeterminate.
    """
    if math.isnan(c):
        raise DomainError("certainty must not be NaN")
    similar, marginal, different, very, physics = CERTAINTY_THRESHOLDS
    if c > similar:
        return CertaintyBand.SIMILAR
    if c > marginal:
        return CertaintyBand.INDETERMINATE
    if c > different:
        return CertaintyBand.MARGINALLY_DIFFERENT
    if c > very:
        return CertaintyBand.DIFFERENT
    if c > physics:
        return CertaintyBand.VERY_DIFFERENT
    return CertaintyBand.VERY_DIFFERENT_PHYSICS_LEVEL
