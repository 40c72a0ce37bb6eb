"""Exception hierarchy for srscale."""


class SrScaleError(Exception):
    """Base class for all srscale errors."""


class DimensionError(SrScaleError, ValueError):
    """Input has the wrong shape (odd dimension, wrong column count, ...)."""


class SingularityError(SrScaleError, ValueError):
    """A quantity that must be nonzero is numerically zero."""


class RankError(SrScaleError, ValueError):
    """A block or matrix that must have full column rank does not."""


class StructureError(SrScaleError, ValueError):
    """Input violates a required structural property (triangularity, skewness, ...)."""


class BreakdownError(SrScaleError, RuntimeError):
    """Symplectic elimination broke down: no admissible pivot pair."""

    def __init__(self, stage, message=None):
        self.stage = stage
        super().__init__(message or f"factorization breakdown at block stage {stage}")


class NonFactorizableError(SrScaleError, RuntimeError):
    """A leading even-dimensional block is singular; no factorization exists."""

    def __init__(self, block, message=None):
        self.block = block
        super().__init__(message or f"singular leading block at index {block}")


class InfeasibleTargetError(SrScaleError, ValueError):
    """Requested common norm target is below the per-block minimum."""


class ParseError(SrScaleError, ValueError):
    """Matrix file could not be parsed."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + loc)
