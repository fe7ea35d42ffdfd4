"""Means, SDs and two-sample tests for samples of proportions.

Statistics are computed on the Weights of the values. Back-transforming
a Weight mean and SD gives a percentage-space summary that differs from
the naive mean and SD of the raw proportions, increasingly so away from 0.5.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from typing import NamedTuple

from .core import Impact, Weight, certainty_of_test, prob_to_weight, weight_to_prob
from .errors import DomainError, SampleSizeError
from .special import P_FLOOR, student_t_two_sided_p


@dataclass(frozen=True)
class ProportionSample:
    values: tuple[float, ...]
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        for i, v in enumerate(self.values):
            if not (0.0 < v < 1.0):
                raise DomainError(
                    f"sample {self.label!r} value #{i + 1} must lie strictly between 0 and 1, got {v!r}"
                )

    def __len__(self):
        return len(self.values)

    def weights(self) -> list[Weight]:
        return [prob_to_weight(v) for v in self.values]


@dataclass(frozen=True)
class SpaceComparison:
    raw_mean: float
    raw_sd: float
    w_mean: Weight
    w_sd: float
    back_mean: float
    back_sd: float
    mean_difference: float
    sd_difference: float


class TwoSampleResult(NamedTuple):
    impact: Impact
    t: float
    df: float
    p: float
    c: float


def _require_size(sample, minimum=2):
    if len(sample) < minimum:
        raise SampleSizeError(
            f"sample {sample.label!r} needs at least {minimum} values, got {len(sample)}"
        )


def sample_stats(sample: ProportionSample) -> SpaceComparison:
    """Compare raw-space and Weight-space mean/SD of ``sample``.

    SDs use the n-1 denominator. The back-transformed SD is the upper
    deviation ``P(w_mean + w_sd) - P(w_mean)``, which is what a percentage
    "mean + 1 SD" band read off in Weight space looks like.
    """
    _require_size(sample)
    raw = sample.values
    w = sample.weights()
    raw_mean = statistics.fmean(raw)
    raw_sd = statistics.stdev(raw)
    w_mean = statistics.fmean(w)
    w_sd = statistics.stdev(w)
    back_mean = weight_to_prob(w_mean)
    back_sd = weight_to_prob(w_mean + w_sd) - back_mean
    return SpaceComparison(
        raw_mean=raw_mean,
        raw_sd=raw_sd,
        w_mean=w_mean,
        w_sd=w_sd,
        back_mean=back_mean,
        back_sd=back_sd,
        mean_difference=back_mean - raw_mean,
        sd_difference=back_sd - raw_sd,
    )


def two_sample_w_test(
    s1: ProportionSample, s2: ProportionSample, equal_var: bool = False
) -> TwoSampleResult:
    """t-test of two proportion samples in Weight space.

    Impact is ``mean W(s2) - mean W(s1)``. The default is Welch's test with
    Welch-Satterthwaite degrees of freedom; ``equal_var=True`` gives the
    pooled-variance Student test instead.
    """
    _require_size(s1)
    _require_size(s2)
    w1, w2 = s1.weights(), s2.weights()
    n1, n2 = len(w1), len(w2)
    m1, m2 = statistics.fmean(w1), statistics.fmean(w2)
    v1, v2 = statistics.variance(w1, m1), statistics.variance(w2, m2)
    impact = m2 - m1

    if equal_var:
        df = n1 + n2 - 2
        pooled = ((n1 - 1) * v1 + (n2 - 1) * v2) / df
        se2 = pooled * (1.0 / n1 + 1.0 / n2)
    else:
        q1, q2 = v1 / n1, v2 / n2
        se2 = q1 + q2
        if se2 > 0.0:
            df = se2 * se2 / (q1 * q1 / (n1 - 1) + q2 * q2 / (n2 - 1))
        else:
            df = n1 + n2 - 2

    if se2 == 0.0:
        # both samples constant
        if impact == 0.0:
            return TwoSampleResult(impact, 0.0, df, 1.0, 0.0)
        return TwoSampleResult(impact, math.inf, df, P_FLOOR, certainty_of_test(P_FLOOR))
    t = abs(impact) / math.sqrt(se2)
    p = student_t_two_sided_p(t, df)
    return TwoSampleResult(impact, t, df, p, certainty_of_test(p))
