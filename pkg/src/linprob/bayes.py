"""Additive Bayes updating: posttest Weight = pretest Weight + sum of Impacts.

The Impacts of successive tests or treatments are simply added, which is
only valid when they act independently of one another given the current
state. That assumption cannot be checked from the numbers alone and is
left to the caller.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Union

from .core import Impact, Weight, prob_to_weight, weight_to_prob
from .errors import DomainError

LabeledImpact = Union[float, tuple[str, float]]


@dataclass(frozen=True)
class ChainStep:
    label: str
    impact: Impact
    running_weight: Weight
    running_probability: float


@dataclass(frozen=True)
class ChainReport:
    pretest_weight: Weight
    pretest_probability: float
    steps: tuple[ChainStep, ...]
    posttest_weight: Weight
    posttest_probability: float


def run_chain(
    impacts: Iterable[LabeledImpact],
    *,
    pretest_probability: float | None = None,
    pretest_weight: Weight | None = None,
) -> ChainReport:
    """Add ``impacts`` in order to a pretest Weight.

    Give exactly one of ``pretest_probability`` or ``pretest_weight``.
    Items of ``impacts`` are bare numbers or ``(label, impact)`` pairs.

    >>> r = run_chain([-0.09, 1.39, 1.39], pretest_weight=-1.38)
    >>> round(r.posttest_weight, 2), round(r.posttest_probability, 2)
    (1.31, 0.95)
    """
    if (pretest_probability is None) == (pretest_weight is None):
        raise TypeError("give exactly one of pretest_probability or pretest_weight")
    if pretest_probability is not None:
        w = prob_to_weight(pretest_probability)
    else:
        if not math.isfinite(pretest_weight):
            raise DomainError(f"pretest weight must be finite, got {pretest_weight!r}")
        w = float(pretest_weight)
    pretest = w

    steps = []
    for k, item in enumerate(impacts, start=1):
        if isinstance(item, tuple):
            label, impact = item
        else:
            label, impact = f"step {k}", item
        impact = float(impact)
        if not math.isfinite(impact):
            raise DomainError(f"impact for {label!r} must be finite, got {impact!r}")
        w = w + impact
        steps.append(ChainStep(label, impact, w, weight_to_prob(w)))

    return ChainReport(
        pretest_weight=pretest,
        pretest_probability=weight_to_prob(pretest),
        steps=tuple(steps),
        posttest_weight=w,
        posttest_probability=weight_to_prob(w),
    )
