"""Exception types shared across the package."""


class CoveringLabError(Exception):
    """Base class for all covering-lab errors."""


class EmptyEdge(CoveringLabError):
    """An edge with no vertices was supplied."""


class DuplicateEdge(CoveringLabError):
    """Two edges are equal as vertex sets (hypergraphs here are simple)."""


class VertexOutOfRange(CoveringLabError):
    """An edge references a vertex index outside 0..n-1."""


class PreconditionViolated(CoveringLabError):
    """An operation was called outside its stated preconditions."""


class InfeasibleParameters(CoveringLabError):
    """No parameter value satisfies the requested constraints."""


class UnsupportedOrder(CoveringLabError):
    """The requested field or plane order is not available."""


class UnknownName(CoveringLabError):
    """No catalog entry with the given name."""


class CapacityExceeded(CoveringLabError):
    """Request exceeds the supported problem size."""


class RaggedMatrix(CoveringLabError):
    """Incidence-matrix rows have differing lengths."""


class NonBinaryCharacter(CoveringLabError):
    """Incidence-matrix text contains a character other than 0/1."""


class EmptyBlock(CoveringLabError):
    """A block-list line contains no point labels."""
