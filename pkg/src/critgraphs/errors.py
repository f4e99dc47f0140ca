"""Shared exception types."""


class GraphFormatError(ValueError):
    """Malformed graph input (graph6 or edge-list text)."""


class BudgetExceeded(RuntimeError):
    """A decider was asked to exceed its explicit search budget."""


class PreconditionError(ValueError):
    """Structural precondition of a procedure does not hold; carries a witness."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class EliminationFailed(RuntimeError):
    """The auxiliary bipartite graph could not be peeled to empty; the residual
    subgraph (trees, highs, edges) is itself the interesting object."""

    def __init__(self, message: str, residual):
        super().__init__(message)
        self.residual = residual
