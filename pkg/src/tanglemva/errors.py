"""Exception hierarchy shared by all engine modules."""


class EngineError(Exception):
    """Base class for every error raised by this package."""


class ParseError(EngineError):
    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.line = line
        self.col = col
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", col {col}" if col is not None else "") + ")"
        super().__init__(message + loc)


class ValidationError(EngineError):
    """Structurally well-formed input that violates a semantic invariant."""


class UnknownArc(ValidationError):
    pass


class ShapeError(EngineError):
    """Matrix or tangle has the wrong shape for the requested operation."""


class DivisionByZero(EngineError, ZeroDivisionError):
    pass


class EvalPole(EngineError):
    """A substitution hit an identically vanishing denominator."""


class LambdaZero(EngineError):
    """Operation undefined because the degree-0 scalar is zero."""


class GluingUndefined(LambdaZero):
    """Strand gluing requested on a pair where the division term vanishes."""


class LabelError(EngineError):
    """Strand-label bookkeeping violation (missing, duplicate, or clashing labels)."""


class ConsistencyError(EngineError):
    """An internal cross-check failed; signals a convention bug, not bad input."""


class NotDivisible(EngineError):
    """Exact polynomial division requested where no exact quotient exists."""
