"""Analysis of a 2x2 event table.

Cell layout (rows are groups, columns outcomes)::

                      event   no event
    treated/exposed     a        c
    control/unexposed   b        d

Impact is ``log10(ad/bc)``; a negative Impact means the treated group has
lower odds of the event than the control group.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    SIMILAR_CAVEAT,
    CertaintyBand,
    Impact,
    ImpactBand,
    Weight,
    certainty_of_test,
    classify_certainty,
    classify_impact,
    prob_to_weight,
)
from .errors import CountTooSmallError, DegenerateRateError, DegenerateTestError, DomainError
from .special import chi_square_upper_p, is_saturated, student_t_two_sided_p

CI_MULTIPLIER = 1.96
HALDANE_INCREMENT = 0.5
LN10 = math.log(10.0)


@dataclass(frozen=True)
class TwoByTwoTable:
    """Event counts: ``a``/``c`` treated with/without event, ``b``/``d`` control."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise DomainError(f"cell {name} must be an integer count, got {value!r}")
            if value < 0:
                raise DomainError(f"cell {name} must be nonnegative, got {value}")

    @property
    def n(self) -> int:
        return self.a + self.b + self.c + self.d

    def transpose(self) -> "TwoByTwoTable":
        return TwoByTwoTable(self.a, self.c, self.b, self.d)

    def swap_outcomes(self) -> "TwoByTwoTable":
        """Exchange the event and no-event columns."""
        return TwoByTwoTable(self.c, self.d, self.a, self.b)

    def scaled(self, k: int) -> "TwoByTwoTable":
        return TwoByTwoTable(self.a * k, self.b * k, self.c * k, self.d * k)


@dataclass(frozen=True)
class ContingencyReport:
    odds_ratio: float
    impact: Impact
    se_ln_or: float
    se_log10_or: float
    ci95_low: Impact
    ci95_high: Impact
    t_stat: float
    df: int
    p_t: float
    c_t: float
    chi_square: float
    p_chi: float
    c_chi: float
    control_rate: float
    treated_rate: float
    arr: float
    rr: float
    rrr: float
    nnt: float
    weight_control: Weight
    weight_treated: Weight
    impact_from_weights: Impact
    impact_band: ImpactBand
    certainty_band: CertaintyBand
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class TestCharacteristics:
    __test__ = False

    sensitivity: float
    specificity: float
    i_plus: Impact
    i_minus: Impact
    i_test: Impact


def analyze_2x2(table: TwoByTwoTable, haldane: bool = False) -> ContingencyReport:
    """Compute the full set of 2x2 statistics for ``table``.

    The t-based p-value uses ``n - 1`` degrees of freedom, which reproduces
    the published 4S/HPS/IDEAL and Goodman tables. Chi-square has no
    continuity correction.

    Zero cells raise :class:`CountTooSmallError` unless ``haldane`` is set,
    in which case 0.5 is added to every cell of a table that has a zero.
    """
    if table.a + table.c == 0 or table.b + table.d == 0:
        raise DegenerateRateError("both groups need at least one subject (a+c >= 1 and b+d >= 1)")
    notes = []
    a, b, c, d = (float(v) for v in (table.a, table.b, table.c, table.d))
    if min(a, b, c, d) == 0.0:
        if not haldane:
            raise CountTooSmallError(
                "every cell must be >= 1 for the odds ratio SE (apply the Haldane correction to add 0.5)"
            )
        a, b, c, d = (v + HALDANE_INCREMENT for v in (a, b, c, d))
        notes.append("haldane correction applied: 0.5 added to every cell")
    n = a + b + c + d

    odds_ratio = (a * d) / (b * c)
    impact = math.log10(odds_ratio)
    se_ln = math.sqrt(1.0 / a + 1.0 / b + 1.0 / c + 1.0 / d)
    se_i = se_ln / LN10
    t_stat = abs(impact) / se_i
    df = table.n - 1
    p_t = student_t_two_sided_p(t_stat, df)

    chi_square = n * (a * d - b * c) ** 2 / ((a + b) * (c + d) * (a + c) * (b + d))
    p_chi = chi_square_upper_p(chi_square, 1)

    control_rate = b / (b + d)
    treated_rate = a / (a + c)
    arr = control_rate - treated_rate
    rr = treated_rate / control_rate
    # all cells are positive here, so both rates lie strictly inside (0, 1)
    weight_control = prob_to_weight(control_rate)
    weight_treated = prob_to_weight(treated_rate)

    c_t = certainty_of_test(p_t)
    if is_saturated(p_t) or is_saturated(p_chi):
        notes.append("p-value underflow: saturated at smallest normal double")
    band = classify_certainty(c_t)
    if band is CertaintyBand.SIMILAR:
        notes.append(SIMILAR_CAVEAT)

    return ContingencyReport(
        odds_ratio=odds_ratio,
        impact=impact,
        se_ln_or=se_ln,
        se_log10_or=se_i,
        ci95_low=impact - CI_MULTIPLIER * se_i,
        ci95_high=impact + CI_MULTIPLIER * se_i,
        t_stat=t_stat,
        df=df,
        p_t=p_t,
        c_t=c_t,
        chi_square=chi_square,
        p_chi=p_chi,
        c_chi=certainty_of_test(p_chi),
        control_rate=control_rate,
        treated_rate=treated_rate,
        arr=arr,
        rr=rr,
        rrr=1.0 - rr,
        nnt=1.0 / arr if arr != 0.0 else math.inf,
        weight_control=weight_control,
        weight_treated=weight_treated,
        impact_from_weights=weight_treated - weight_control,
        impact_band=classify_impact(impact),
        certainty_band=band,
        notes=tuple(notes),
    )


def characteristics_from_rates(sensitivity: float, specificity: float) -> TestCharacteristics:
    """Positive, negative and overall test Impacts from sensitivity and specificity."""
    for name, value in (("sensitivity", sensitivity), ("specificity", specificity)):
        if not (0.0 < value < 1.0):
            raise DegenerateTestError(f"{name} must lie strictly between 0 and 1, got {value!r}")
    i_plus = math.log10(sensitivity / (1.0 - specificity))
    i_minus = math.log10((1.0 - sensitivity) / specificity)
    return TestCharacteristics(
        sensitivity=sensitivity,
        specificity=specificity,
        i_plus=i_plus,
        i_minus=i_minus,
        i_test=i_plus - i_minus,
    )


def test_characteristics(table: TwoByTwoTable) -> TestCharacteristics:
    """Diagnostic-test view of a table: ``a`` true positives, ``d`` true negatives.

    Sensitivity is a/(a+b), specificity d/(c+d).
    """
    if table.a + table.b == 0 or table.c + table.d == 0:
        raise DegenerateTestError("need at least one subject with and one without the outcome")
    return characteristics_from_rates(
        table.a / (table.a + table.b), table.d / (table.c + table.d)
    )


# keep pytest from collecting the public function above as a test
test_characteristics.__test__ = False
