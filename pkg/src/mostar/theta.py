"""The four-point edge relation, its transitive closure, and edge partitions.

Two edges ``e = xy`` and ``f = ab`` are related when
``d(x,a) + d(y,b) != d(x,b) + d(y,a)``. The relation is reflexive and
symmetric but not transitive in general (odd cycles), so the partition
used by the quotient decomposition comes from its transitive closure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import MalformedPartitionError
from .graph import Graph, all_pairs_distances, bfs_distances

__all__ = [
    "EdgePartition",
    "edge_partition",
    "trivial_partition",
    "theta_related",
    "theta_star_partition",
    "is_c_partition",
]


@dataclass(frozen=True)
class EdgePartition:
    """Disjoint nonempty edge-id classes covering the whole edge set.

    ``class_of[e]`` is the index into ``classes`` of the class holding
    edge ``e``.
    """

    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.classes)


def edge_partition(g: Graph, classes: Iterable[Iterable[int]]) -> EdgePartition:
    """Validate candidate classes against ``g`` and build an :class:`EdgePartition`.

    Raises :class:`MalformedPartitionError` when the classes are empty,
    overlap, reference unknown edge ids, or fail to cover every edge.
    """

    normalized: list[tuple[int, ...]] = []
    class_of = [-1] * g.m
    for ci, cls in enumerate(classes):
        ids = sorted(set(cls))
        if not ids:
            raise MalformedPartitionError(f"class {ci} is empty")
        for e in ids:
            if not (0 <= e < g.m):
                raise MalformedPartitionError(
                    f"class {ci} references edge {e}, valid range is 0..{g.m - 1}"
                )
            if class_of[e] >= 0:
                raise MalformedPartitionError(
                    f"edge {e} appears in classes {class_of[e]} and {ci}"
                )
            class_of[e] = ci
        normalized.append(tuple(ids))
    missing = [e for e in range(g.m) if class_of[e] < 0]
    if missing:
        raise MalformedPartitionError(f"edge {missing[0]} is not covered by any class")
    return EdgePartition(classes=tuple(normalized), class_of=tuple(class_of))


def trivial_partition(g: Graph) -> EdgePartition:
    """The single-class partition ``{E(G)}``, coarser than anything."""

    return edge_partition(g, [range(g.m)])


def _four_point(dist: Sequence[Sequence[int]], x: int, y: int, a: int, b: int) -> bool:
    return dist[x][a] + dist[y][b] != dist[x][b] + dist[y][a]


def theta_related(
    g: Graph, e: int, f: int, *, dist: Sequence[Sequence[int]] | None = None
) -> bool:
    """Whether edges ``e`` and ``f`` satisfy the four-point inequality.

    A precomputed all-pairs distance table can be supplied to avoid the
    two BFS passes. Reflexivity and symmetry hold by construction.
    """

    for eid in (e, f):
        if not (0 <= eid < g.m):
            raise ValueError(f"edge id {eid} out of range 0..{g.m - 1}")
    x, y = g.edges[e]
    a, b = g.edges[f]
    if dist is not None:
        return _four_point(dist, x, y, a, b)
    dx = bfs_distances(g, x)
    dy = bfs_distances(g, y)
    return dx[a] + dy[b] != dx[b] + dy[a]


class _UnionFind:
    """Array union-find with path compression and union by size."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.size = [1] * size

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]


def theta_star_partition(
    g: Graph, *, dist: Sequence[Sequence[int]] | None = None
) -> EdgePartition:
    """Edge classes of the transitive closure of the four-point relation.

    Computes one distance table (n BFS passes), tests all O(m^2) edge
    pairs, and merges related pairs with union-find. Classes are ordered
    by their smallest edge id; ids inside a class are sorted.
    """

    if dist is None:
        dist = all_pairs_distances(g)
    m = g.m
    edges = g.edges
    uf = _UnionFind(m)
    for e in range(m):
        x, y = edges[e]
        dx = dist[x]
        dy = dist[y]
        for f in range(e + 1, m):
            if uf.find(e) == uf.find(f):
                continue
            a, b = edges[f]
            if dx[a] + dy[b] != dx[b] + dy[a]:
                uf.union(e, f)
    grouped: dict[int, list[int]] = {}
    for e in range(m):
        grouped.setdefault(uf.find(e), []).append(e)
    classes = sorted(grouped.values(), key=lambda ids: ids[0])
    return edge_partition(g, classes)


def is_c_partition(
    g: Graph,
    candidate: EdgePartition,
    *,
    closure: EdgePartition | None = None,
) -> bool:
    """Whether every closure class sits inside a single candidate class.

    Partitions with that property are exactly the ones the quotient
    decomposition is valid for. ``closure`` may be passed when the caller
    already computed it.
    """

    if len(candidate.class_of) != g.m:
        raise MalformedPartitionError(
            f"candidate covers {len(candidate.class_of)} edges, graph has {g.m}"
        )
    edge_partition(g, candidate.classes)
    if closure is None:
        closure = theta_star_partition(g)
    for cls in closure.classes:
        first = candidate.class_of[cls[0]]
        if any(candidate.class_of[e] != first for e in cls):
            return False
    return True
