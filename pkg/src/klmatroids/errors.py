"""Exception types raised across the package."""


class MatroidError(ValueError):
    """Base class for every error raised by klmatroids."""


class EmptyBasisList(MatroidError):
    pass


class UnequalCardinalities(MatroidError):
    pass


class ExchangeAxiomViolated(MatroidError):
    """The basis family fails the exchange axiom.

    ``witness`` is ``(B1, B2, x)``: no ``y`` in ``B2 - B1`` makes
    ``B1 - x + y`` a basis.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ElementOutOfRange(MatroidError):
    pass


class UniverseTooLarge(MatroidError):
    pass


class GroundSetExhausted(MatroidError):
    pass


class RankZeroTruncation(MatroidError):
    pass


class NotAPermutation(MatroidError):
    pass


class InvalidCorank(MatroidError):
    pass


class NotABasis(MatroidError):
    pass


class ElementInBasis(MatroidError):
    pass


class ElementNotInBasis(MatroidError):
    pass


class InvalidRank(MatroidError):
    pass


class LoopOrColoopPresent(MatroidError):
    pass


class InvalidParameters(MatroidError):
    pass


class ParseError(MatroidError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UniverseTooLargeForBruteForce(MatroidError):
    pass


class SourceUnavailable(MatroidError):
    pass


class CrossCheckFailure(RuntimeError):
    """Two independent computations of the same quantity disagreed."""
