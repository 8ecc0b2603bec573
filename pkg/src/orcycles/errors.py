"""Exception hierarchy shared across the package."""


class OrCyclesError(Exception):
    """Base class for all domain errors raised by this package."""


class GraphError(OrCyclesError, ValueError):
    """An edge list violates the oriented-graph invariants."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class LoopEdge(GraphError):
    pass


class AntiparallelPair(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class ZeroSize(OrCyclesError, ValueError):
    pass


class ParseError(OrCyclesError, ValueError):
    pass


class SearchBudgetExceeded(OrCyclesError, RuntimeError):
    """Raised when an exact search runs out of node expansions.

    Exhaustion is never reported as absence; the caller decides whether to
    retry with a larger budget or another engine.
    """

    def __init__(self, budget, what="search"):
        super().__init__(f"{what} exceeded its budget of {budget} node expansions")
        self.budget = budget


class ModulusMismatch(OrCyclesError, ValueError):
    pass


class EmptySet(OrCyclesError, ValueError):
    pass


class PreconditionViolation(OrCyclesError, ValueError):
    pass


class InternalInvariantViolation(OrCyclesError, AssertionError):
    """A guaranteed mathematical fact failed to hold; indicates a bug."""


class InfeasibleN(OrCyclesError, ValueError):
    pass


class UnsupportedLength(OrCyclesError, ValueError):
    pass


class NotExceptional(OrCyclesError, ValueError):
    pass


class IncompatibleSidewalks(OrCyclesError, ValueError):
    pass


class BlobTooSmall(OrCyclesError, ValueError):
    pass


class DegreeInfeasible(OrCyclesError, ValueError):
    pass
