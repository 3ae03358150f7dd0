"""Exception hierarchy shared by every module."""


class QuasiCartanError(Exception):
    """Base class for all errors raised by qcartan."""


class InvalidMatrix(QuasiCartanError, ValueError):
    pass


class InvalidBigraph(QuasiCartanError, ValueError):
    pass


class NotSimple(InvalidBigraph):
    pass


class InvalidRank(QuasiCartanError, ValueError):
    pass


class NotPositiveDefinite(QuasiCartanError):
    pass


class EntryOutOfRange(NotPositiveDefinite):
    """An off-diagonal entry has magnitude >= 2 (never positive definite)."""


class GuardExceeded(QuasiCartanError, RuntimeError):
    pass


class InvalidStep(QuasiCartanError, ValueError):
    pass


class SequenceStepError(QuasiCartanError):
    """A step inside a sequence failed; carries the failing position."""

    def __init__(self, index, step, cause):
        self.index = index
        self.step = step
        self.cause = cause
        super().__init__(f"step {index} {step}: {cause}")


class NotADynkinDiagram(QuasiCartanError):
    pass


class NotComplete(QuasiCartanError):
    pass


class NotTwoColorable(QuasiCartanError):
    pass


class NotAType(QuasiCartanError):
    pass


class NotConnected(QuasiCartanError):
    pass


class VerticesAdjacent(QuasiCartanError, ValueError):
    pass


class EmptySide(QuasiCartanError, ValueError):
    pass


class InvariantViolation(QuasiCartanError):
    pass


class InvalidWitness(QuasiCartanError):
    pass


class InvalidDecomposition(QuasiCartanError):
    pass


class TooLarge(QuasiCartanError, ValueError):
    pass


class ParseError(QuasiCartanError):
    def __init__(self, message, line=None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)


class FormatSyntaxError(ParseError):
    pass


class DimensionMismatch(ParseError):
    pass


class DiagonalNotTwo(ParseError):
    pass


class NotSymmetric(ParseError):
    pass


class VertexOutOfRange(ParseError):
    pass
