"""Connected-graph primitives.

Vertices are dense integer ids ``0..n-1``; edges carry ids in input order.
All distances are hop counts. Everything here is an immutable value, so
instances can be shared freely across threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from numbers import Real
from typing import Iterable, Sequence

from .errors import (
    DisconnectedError,
    DuplicateEdgeError,
    IndexOutOfRangeError,
    SelfLoopError,
)

Weight = int | float

__all__ = [
    "Graph",
    "WeightedGraph",
    "EdgeSplit",
    "build_graph",
    "unit_weights",
    "bfs_distances",
    "all_pairs_distances",
    "edge_split",
    "components_after_removal",
]


@dataclass(frozen=True)
class Graph:
    """Simple connected undirected graph.

    ``adjacency[v]`` lists ``(neighbor, edge_id)`` pairs in edge-input
    order. Construct through :func:`build_graph`, which validates the
    invariants (no self-loops, no duplicate edges, connected).
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


@dataclass(frozen=True)
class WeightedGraph:
    """Graph with nonnegative vertex and edge weights.

    With all-integer weights every downstream quantity stays an exact
    integer; fractional weights switch the pipeline to float arithmetic.
    """

    graph: Graph
    vertex_weights: tuple[Weight, ...]
    edge_weights: tuple[Weight, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertex_weights", tuple(self.vertex_weights))
        object.__setattr__(self, "edge_weights", tuple(self.edge_weights))
        if len(self.vertex_weights) != self.graph.n:
            raise ValueError(
                f"expected {self.graph.n} vertex weights, got {len(self.vertex_weights)}"
            )
        if len(self.edge_weights) != self.graph.m:
            raise ValueError(
                f"expected {self.graph.m} edge weights, got {len(self.edge_weights)}"
            )
        for i, w in enumerate(self.vertex_weights):
            if not isinstance(w, Real) or w < 0:
                raise ValueError(f"vertex weight {i} is not a nonnegative number: {w!r}")
        for i, w in enumerate(self.edge_weights):
            if not isinstance(w, Real) or w < 0:
                raise ValueError(f"edge weight {i} is not a nonnegative number: {w!r}")

    @property
    def is_integral(self) -> bool:
        return all(isinstance(w, int) for w in self.vertex_weights) and all(
            isinstance(w, int) for w in self.edge_weights
        )


@dataclass(frozen=True)
class EdgeSplit:
    """Partition of the vertex set induced by one edge ``{u, v}``.

    ``near_u`` holds the vertices strictly closer to ``u`` than to ``v``
    (by hop distance), ``near_v`` the converse, and ``equidistant`` the
    rest. The three sets always partition the vertex set.
    """

    edge: int
    near_u: frozenset[int]
    near_v: frozenset[int]
    equidistant: frozenset[int]


def _adjacency_from_edges(
    n: int, edges: Sequence[tuple[int, int]]
) -> tuple[tuple[tuple[int, int], ...], ...]:
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for eid, (u, v) in enumerate(edges):
        adj[u].append((v, eid))
        adj[v].append((u, eid))
    return tuple(tuple(a) for a in adj)


def _check_connected(n: int, adjacency) -> None:
    if n == 0:
        return
    seen = bytearray(n)
    seen[0] = 1
    queue = deque([0])
    reached = 1
    while queue:
        x = queue.popleft()
        for y, _ in adjacency[x]:
            if not seen[y]:
                seen[y] = 1
                reached += 1
                queue.append(y)
    if reached != n:
        raise DisconnectedError(seen.index(0))


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Validate and build a :class:`Graph`; edge ids follow input order.

    Raises :class:`IndexOutOfRangeError`, :class:`SelfLoopError`,
    :class:`DuplicateEdgeError`, or :class:`DisconnectedError`, naming the
    offending edge or vertex.
    """

    if n < 1:
        raise ValueError(f"vertex count must be positive, got {n}")
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for i, (u, v) in enumerate(edge_list):
        if not (0 <= u < n):
            raise IndexOutOfRangeError(i, u, n)
        if not (0 <= v < n):
            raise IndexOutOfRangeError(i, v, n)
        if u == v:
            raise SelfLoopError(i, u)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(i, u, v)
        seen.add(key)
        edges.append((u, v))
    adjacency = _adjacency_from_edges(n, edges)
    _check_connected(n, adjacency)
    return Graph(n=n, edges=tuple(edges), adjacency=adjacency)


def unit_weights(g: Graph) -> WeightedGraph:
    """Attach weight 1 to every vertex and edge."""

    return WeightedGraph(g, (1,) * g.n, (1,) * g.m)


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source`` to every vertex."""

    if not (0 <= source < g.n):
        raise ValueError(f"source {source} out of range 0..{g.n - 1}")
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    adjacency = g.adjacency
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y, _ in adjacency[x]:
            if dist[y] < 0:
                dist[y] = dx
                queue.append(y)
    return dist


def all_pairs_distances(g: Graph) -> list[list[int]]:
    """Full distance table, one BFS per source. O(n*(n+m)) time, O(n^2) space."""

    return [bfs_distances(g, s) for s in range(g.n)]


def edge_split(
    g: Graph, e: int, *, dist_u: Sequence[int] | None = None, dist_v: Sequence[int] | None = None
) -> EdgeSplit:
    """Split the vertex set by proximity to the endpoints of edge ``e``.

    Membership is decided purely on integer hop distances; weights never
    enter. Precomputed distance rows for the endpoints may be supplied to
    skip the two BFS passes.
    """

    if not (0 <= e < g.m):
        raise ValueError(f"edge id {e} out of range 0..{g.m - 1}")
    u, v = g.edges[e]
    du = bfs_distances(g, u) if dist_u is None else dist_u
    dv = bfs_distances(g, v) if dist_v is None else dist_v
    near_u = []
    near_v = []
    equidistant = []
    for x in range(g.n):
        if du[x] < dv[x]:
            near_u.append(x)
        elif dv[x] < du[x]:
            near_v.append(x)
        else:
            equidistant.append(x)
    return EdgeSplit(
        edge=e,
        near_u=frozenset(near_u),
        near_v=frozenset(near_v),
        equidistant=frozenset(equidistant),
    )


def components_after_removal(
    g: Graph, removed: Iterable[int]
) -> tuple[list[int], int]:
    """Component labels of the graph with the given edge ids deleted.

    Labels are ``0..k-1``, assigned in order of the smallest vertex id in
    each component, so the output is deterministic.
    """

    removed_set = frozenset(removed)
    for e in removed_set:
        if not (0 <= e < g.m):
            raise ValueError(f"edge id {e} out of range 0..{g.m - 1}")
    labels = [-1] * g.n
    adjacency = g.adjacency
    count = 0
    for start in range(g.n):
        if labels[start] >= 0:
            continue
        labels[start] = count
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y, eid in adjacency[x]:
                if labels[y] < 0 and eid not in removed_set:
                    labels[y] = count
                    queue.append(y)
        count += 1
    return labels, count
