"""Semantic exception hierarchy.

Every domain failure raised by this package derives from
:class:`CatshrinkError`, so callers (CLI, HTTP service) can map the whole
family to one exit path while still matching on the specific condition.
"""

from __future__ import annotations


class CatshrinkError(Exception):
    """Base class for all domain errors raised by catshrink."""


class EmptyTableError(CatshrinkError):
    """Contingency table has zero rows or zero columns."""


class NegativeCellError(CatshrinkError):
    """Contingency table contains a negative count."""


class ZeroTotalError(CatshrinkError):
    """All cells of a contingency table are zero."""


class InvalidDimsError(CatshrinkError):
    """Table dimensions do not match what the operation requires."""


class DegenerateMarginError(CatshrinkError):
    """A row or column total is zero where a positive margin is required."""


class NoDiscordantPairsError(CatshrinkError):
    """Both off-diagonal cells are zero; the symmetry statistic is undefined."""


class ZeroLambdaError(CatshrinkError):
    """Regularization weight is zero; scaling the statistic is undefined."""


class InsufficientReplicatesError(CatshrinkError):
    """Bootstrap replicate count below the supported minimum."""


class DimensionMismatchError(CatshrinkError):
    """Shrinkage targets do not match the table's shape."""


class ZeroMarginError(CatshrinkError):
    """A regularized margin is zero, making its logarithm undefined."""


class HypothesisViolatedError(CatshrinkError):
    """Inputs violate the hypotheses of the zero-count elision identity."""


class ParseError(CatshrinkError):
    """Malformed table or target input.

    Carries the 1-based ``line`` and ``column`` of the offending token when
    the input is positional text; both are ``None`` for structural problems.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None and column is not None:
            message = f"{message} (line {line}, column {column})"
        elif line is not None:
            message = f"{message} (line {line})"
        super().__init__(message)
