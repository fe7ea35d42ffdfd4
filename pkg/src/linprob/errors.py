"""Exception types raised by linprob.

Every error is a ``ValueError`` subclass so callers that only care about
"bad input" can catch that.
"""


class LinProbError(ValueError):
    """Base class for all linprob input errors."""


class DomainError(LinProbError):
    """An argument lies outside the domain of the operation."""


class CountTooSmallError(LinProbError):
    """A 2x2 table has a zero cell, so the log odds ratio SE is undefined."""


class DegenerateRateError(LinProbError):
    """One group of a 2x2 table is empty, so its event rate is undefined."""


class DegenerateTestError(LinProbError):
    """Sensitivity or specificity is exactly 0 or 1."""


class SampleSizeError(LinProbError):
    """A sample is too small for the requested statistic."""


class ZeroImpactError(LinProbError):
    """Impact is zero, so the maximal NNT is undefined."""


class EmptyInputError(LinProbError):
    """An operation that needs at least one value received none."""


class ParseError(LinProbError):
    """A CSV input file is malformed.

    ``line`` is the 1-based physical line number of the offending row.
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
