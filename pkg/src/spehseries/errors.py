"""Exception types raised across the package."""


class SpehSeriesError(Exception):
    """Base class for all errors raised by spehseries."""

    #: short machine-readable tag used in CLI error JSON
    code = "error"


class NonIntegralOrNegativeLength(SpehSeriesError, ValueError):
    code = "NonIntegralOrNegativeLength"


class LineMismatch(SpehSeriesError, ValueError):
    code = "LineMismatch"


class UnionNotASegment(SpehSeriesError, ValueError):
    code = "UnionNotASegment"


class ClosureTooLarge(SpehSeriesError, RuntimeError):
    code = "ClosureTooLarge"


class BasisMismatch(SpehSeriesError, ValueError):
    code = "BasisMismatch"


class NotALadder(SpehSeriesError, ValueError):
    code = "NotALadder"


class OutOfRange(SpehSeriesError, ValueError):
    code = "OutOfRange"


class InvalidIndex(SpehSeriesError, ValueError):
    code = "InvalidIndex"


class InternalInconsistency(SpehSeriesError, AssertionError):
    """A proved identity failed at runtime; always a bug."""

    code = "InternalInconsistency"


class NotSpeh(SpehSeriesError, ValueError):
    code = "NotSpeh"


class AgreementFailure(SpehSeriesError, RuntimeError):
    code = "AgreementFailure"
