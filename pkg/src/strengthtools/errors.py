"""Exception types shared across the package."""


class GraphInputError(ValueError):
    """Base class for invalid graph-construction input."""


class OrderRangeError(GraphInputError):
    """Vertex count outside the supported range."""


class LoopEdgeError(GraphInputError):
    """An edge joins a vertex to itself."""


class VertexRangeError(GraphInputError):
    """A vertex index falls outside ``[0, order - 1]``."""


class Graph6Error(ValueError):
    """Malformed graph6 token; ``offset`` is the byte where parsing failed."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class Graph6HeaderError(Graph6Error):
    """The order header of a graph6 token is malformed or unsupported."""


class Graph6TruncatedError(Graph6Error):
    """The graph6 bit body ends before all adjacency bits are present."""


class Graph6TrailingError(Graph6Error):
    """Extra characters follow a complete graph6 token."""


class EmptyEdgeSetError(ValueError):
    """The operation needs at least one edge (edgeless strength is infinite)."""


class NumberingError(ValueError):
    """A vertex labeling is not a bijection onto ``{1, ..., n}``."""


class IsolatedVertexError(ValueError):
    """The operation needs minimum degree >= 1; ``vertex`` is isolated."""

    def __init__(self, vertex: int):
        super().__init__(f"vertex {vertex} is isolated")
        self.vertex = vertex


class CapacityError(ValueError):
    """Input exceeds the documented size cap of a solver."""
