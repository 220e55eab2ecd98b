"""Exception hierarchy shared across the package."""


class MagicCoverError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(MagicCoverError):
    """Structural problem with a graph or labeling input."""


class DuplicateVertexError(GraphError):
    pass


class UnknownEndpointError(GraphError):
    pass


class UnknownVertexError(GraphError):
    pass


class LoopEdgeError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class WrongDomainError(GraphError):
    """Labeling domain does not match the graph's vertices and edges."""


class NotBijectiveError(GraphError):
    """Labeling is not a bijection onto 1..|V|+|E|.

    Carries a witness: either a duplicated label or a missing one.
    """

    def __init__(self, message, *, duplicate=None, missing=None):
        super().__init__(message)
        self.duplicate = duplicate
        self.missing = missing


class UnknownElementError(GraphError):
    pass


class ParamOutOfRangeError(MagicCoverError):
    """A family or labeling parameter is outside its valid range."""


class ParityViolationError(MagicCoverError):
    """Parameters fail a parity condition required by a construction."""


class NotInducedError(MagicCoverError):
    """Given element set is not an induced block in the expected position."""


class PhiNotConstantError(MagicCoverError):
    """Permutation quadruple does not produce a constant balance value."""


class PatternTooLargeError(MagicCoverError):
    """Pattern exceeds the matcher's configured vertex limit."""


class LimitExceededError(MagicCoverError):
    """Enumeration or search exceeded a configured soft limit."""
