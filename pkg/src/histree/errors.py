"""Exception hierarchy shared by every module of the package."""


class HistError(Exception):
    """Base class for all errors raised by histree."""


class ParseError(HistError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MalformedHeader(ParseError):
    pass


class MalformedLine(ParseError):
    pass


class VertexOutOfRange(ParseError):
    pass


class SelfLoop(ParseError):
    pass


class DuplicateEdge(ParseError):
    pass


class EdgeCountMismatch(ParseError):
    pass


class EdgeNotInGraph(HistError, ValueError):
    pass


class TooLarge(HistError):
    def __init__(self, n: int, bound: int, what: str = "graph"):
        self.n = n
        self.bound = bound
        super().__init__(f"{what} has {n} vertices, above the bound {bound}")


class QuotientTooLarge(TooLarge):
    pass


class Disconnected(HistError):
    pass


class PreconditionError(HistError, ValueError):
    """A decider was called on a graph outside its class."""


class NotChordal(PreconditionError):
    pass


class NotSplit(PreconditionError):
    pass


class NotBlockSplit(PreconditionError):
    pass


class IsBlockSplit(PreconditionError):
    pass


class IsSplit(PreconditionError):
    pass


class WrongDiameter(PreconditionError):
    pass


class DiameterTooLarge(PreconditionError):
    pass


class InvalidPEO(PreconditionError):
    pass


class InvalidDecomposition(PreconditionError):
    pass


class BudgetExceeded(HistError):
    pass


class KernelUndecided(HistError):
    pass


class GeneratorError(HistError, ValueError):
    pass


class EmptyParams(GeneratorError):
    pass


class TooSmall(GeneratorError):
    pass


class NotBipartite(GeneratorError):
    pass


class UnequalParts(GeneratorError):
    pass


class NotPendant(GeneratorError):
    pass
