"""Exception types raised across the package.

Every domain error derives from :class:`MostarError` so callers (and the
CLI) can distinguish validation failures from programming errors.
"""


class MostarError(Exception):
    """Base class for all errors raised by this package."""


class SelfLoopError(MostarError):
    """An edge joins a vertex to itself."""

    def __init__(self, edge_index: int, vertex: int):
        self.edge_index = edge_index
        self.vertex = vertex
        super().__init__(f"edge {edge_index} is a self-loop at vertex {vertex}")


class DuplicateEdgeError(MostarError):
    """The same unordered vertex pair appears twice in the edge list."""

    def __init__(self, edge_index: int, u: int, v: int):
        self.edge_index = edge_index
        self.pair = (u, v)
        super().__init__(f"edge {edge_index} duplicates pair {{{u}, {v}}}")


class IndexOutOfRangeError(MostarError):
    """An edge references a vertex id outside 0..n-1."""

    def __init__(self, edge_index: int, vertex: int, n: int):
        self.edge_index = edge_index
        self.vertex = vertex
        super().__init__(
            f"edge {edge_index} references vertex {vertex}, valid range is 0..{n - 1}"
        )


class DisconnectedError(MostarError):
    """The input graph is not connected."""

    def __init__(self, unreachable_vertex: int):
        self.unreachable_vertex = unreachable_vertex
        super().__init__(
            f"graph is disconnected: vertex {unreachable_vertex} is unreachable from vertex 0"
        )


class MalformedPartitionError(MostarError):
    """A candidate edge partition does not partition the edge set."""


class NotCPartitionError(MostarError):
    """A partition is finer than the edge-relation closure classes somewhere.

    The quotient decomposition is unsound for such partitions, so the
    engine refuses to proceed.
    """


class NotATreeError(MostarError):
    """The linear tree engine was handed a graph that is not a tree."""

    def __init__(self, n: int, m: int):
        self.n = n
        self.m = m
        super().__init__(f"graph with {n} vertices and {m} edges is not a tree")


class EmptyCellSetError(MostarError):
    """A benzenoid description contains no hexagonal cells."""

    def __init__(self):
        super().__init__("cell set is empty")


class DisconnectedCellsError(MostarError):
    """The hexagonal cells do not form one edge-connected cluster."""

    def __init__(self, cell: "tuple[int, int]"):
        self.cell = cell
        super().__init__(f"cell set is disconnected: cell {cell} is isolated from the first cell")


class ParseError(MostarError):
    """An input file could not be parsed; carries the offending line number."""

    def __init__(self, message: str, *, path: str | None = None, line: int | None = None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"{line}:"
        if where:
            where += " "
        super().__init__(f"{where}{message}")
