"""Operations across studies: summing Certainties, multiplicity, replication."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .core import Certainty, certainty_of_test, p_from_certainty
from .errors import DomainError, EmptyInputError
from .special import normal_cdf, normal_quantile, student_t_two_sided_p

# two-sided p = 0.05 cut-off on the z scale
Z_975 = normal_quantile(0.975)


@dataclass(frozen=True)
class CombinedCertainty:
    raw_sum: Certainty
    corrected: Certainty
    study_count: int
    normal_data: bool


@dataclass(frozen=True)
class ReplicationEstimate:
    c: Certainty
    probability_replicates: float
    notes: tuple[str, ...] = ()


class RegressionCertainty(NamedTuple):
    t: float
    p: float
    c: Certainty


def combine_certainties(cs: Sequence[Certainty], normal_data: bool = True) -> CombinedCertainty:
    """Sum per-study Certainties with the +1 per added study correction.

    Adding Certainties overstates the evidence relative to pooling the raw
    data. The correction adds 1 for every study beyond the first, and one
    more when the data are not normally distributed. Unequal study sizes or
    SDs need no extra correction.
    """
    cs = [float(c) for c in cs]
    if not cs:
        raise EmptyInputError("need at least one certainty to combine")
    raw = math.fsum(cs)
    k = len(cs)
    corrected = raw + (k - 1) + (0 if normal_data else 1)
    return CombinedCertainty(raw_sum=raw, corrected=corrected, study_count=k, normal_data=normal_data)


def multiplicity_adjust(c: Certainty, num_tests: int) -> Certainty:
    """Shrink a Certainty by sqrt(number of tests performed)."""
    if num_tests < 1:
        raise DomainError(f"number of tests must be >= 1, got {num_tests!r}")
    return c / math.sqrt(num_tests)


def replication_probability(c: Certainty) -> ReplicationEstimate:
    """Chance that an identical repeat study reaches two-sided p < 0.05.

    Treats the observed effect as the true one: with ``z`` the two-sided
    z-score of the observed p, the repeat succeeds with probability
    ``Phi(z - 1.959964)``.
    """
    if not math.isfinite(c):
        raise DomainError(f"certainty must be finite, got {c!r}")
    p = p_from_certainty(c)
    # upper-tail form keeps precision when p is tiny
    z_obs = -normal_quantile(p / 2.0)
    notes = ()
    if c >= 0.0:
        notes = ("non-negative certainty: observed p >= 0.5, little evidence of any effect",)
    return ReplicationEstimate(c=c, probability_replicates=normal_cdf(z_obs - Z_975), notes=notes)


def regression_certainty(r_squared: float, n: int) -> RegressionCertainty:
    """Certainty of a correlation from r^2 and the number of points.

    ``t = sqrt((n - 2) r^2 / (1 - r^2))`` on ``n - 2`` degrees of freedom.
    """
    if not (0.0 <= r_squared < 1.0):
        raise DomainError(f"r^2 must lie in [0, 1), got {r_squared!r}")
    if n < 3:
        raise DomainError(f"need at least 3 points, got {n!r}")
    t = math.sqrt((n - 2) * r_squared / (1.0 - r_squared))
    p = student_t_two_sided_p(t, n - 2)
    return RegressionCertainty(t=t, p=p, c=certainty_of_test(p))
