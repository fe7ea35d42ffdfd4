"""Probability analysis in log10-odds ("Weight") space.

Probabilities become Weights, effect sizes become Impacts (differences of
Weights) and p-values become Certainties, all on one additive scale.
"""

from .bayes import ChainReport, ChainStep, run_chain
from .contingency import (
    ContingencyReport,
    TestCharacteristics,
    TwoByTwoTable,
    analyze_2x2,
    characteristics_from_rates,
    test_characteristics,
)
from .continuous import ProportionSample, SpaceComparison, sample_stats, two_sample_w_test
from .core import (
    CertaintyBand,
    ImpactBand,
    certainty_from_p,
    classify_certainty,
    classify_impact,
    impact_between,
    p_from_certainty,
    prob_to_weight,
    weight_to_prob,
)
from .errors import (
    CountTooSmallError,
    DegenerateRateError,
    DegenerateTestError,
    DomainError,
    EmptyInputError,
    LinProbError,
    ParseError,
    SampleSizeError,
    ZeroImpactError,
)
from .horizon import HorizonProjection, MaximalEffect, fit_tau, maximal_effect, project
from .meta import (
    CombinedCertainty,
    ReplicationEstimate,
    combine_certainties,
    multiplicity_adjust,
    regression_certainty,
    replication_probability,
)
from .readers import read_sample_csv, read_table_csv
from .special import BACKEND

__version__ = "0.1.0"
