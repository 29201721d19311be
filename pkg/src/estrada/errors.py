"""Exception types raised by the library."""


class EstradaError(Exception):
    """Base class for all library errors."""


class GraphConstructionError(EstradaError, ValueError):
    """Invalid graph construction input (loop edge, endpoint out of range)."""


class DegenerateGraphError(EstradaError, ValueError):
    """Operation undefined on the n=0 graph."""


class CapacityError(EstradaError, ValueError):
    """Input exceeds a documented size limit."""


class FormatError(EstradaError, ValueError):
    """Malformed serialized graph data.

    ``offset`` is the byte offset within a graph6 line, ``line`` the
    1-based line number within an edge-list document; either may be None.
    """

    def __init__(self, message, *, offset=None, line=None):
        super().__init__(message)
        self.offset = offset
        self.line = line


class ConsistencyError(FormatError):
    """Edge-list header disagrees with the edges actually listed."""


class ParameterError(EstradaError, ValueError):
    """Invalid parameters for a graph family generator."""


class DomainError(EstradaError, ValueError):
    """Argument outside a function's mathematical domain."""


class ConvergenceError(EstradaError, RuntimeError):
    """Eigensolver failed to converge (not expected for symmetric input)."""
