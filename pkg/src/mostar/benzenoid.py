"""Benzenoid systems built from hexagonal cells.

A cell set in axial coordinates induces the molecular graph of fused
hexagons. Edges fall into three direction classes; contracting the graph
by one direction class yields a weighted tree, and the Mostar index is
the sum of the three tree values. That pipeline runs in time linear in
the vertex count, against the quadratic-and-worse direct computation.

Geometry is all-integer: the flat-top hexagon at axial ``(q, r)`` gets
center ``(3q, q + 2r)`` and corners at fixed offsets from it, so corners
shared between adjacent cells coincide exactly and deduplication is a
plain map lookup.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .engine import (
    ClassContribution,
    MostarReport,
    QuotientGraph,
    build_quotient,
    mostar_tree_linear,
)
from .errors import DisconnectedCellsError, EmptyCellSetError
from .graph import Graph, _adjacency_from_edges, unit_weights
from .theta import EdgePartition, edge_partition

__all__ = [
    "BenzenoidSpec",
    "BenzenoidGraph",
    "ElementaryCut",
    "build_benzenoid",
    "direction_partition",
    "elementary_cuts",
    "quotient_trees",
    "mostar_benzenoid",
    "coronene",
    "coronene_closed_form",
]

# Corner offsets from a cell center, in cyclic order around the hexagon.
_CORNER_OFFSETS = ((2, 0), (1, 1), (-1, 1), (-2, 0), (-1, -1), (1, -1))

# Axial steps to the six neighboring cells.
_CELL_NEIGHBORS = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1))


def _direction_of(dx: int, dy: int) -> int:
    # (+-2, 0) -> 0; signs equal -> 1; signs opposite -> 2.
    if dy == 0:
        return 0
    return 1 if dx * dy > 0 else 2


@dataclass(frozen=True)
class BenzenoidSpec:
    """Finite nonempty set of hexagonal cells in axial coordinates."""

    cells: tuple[tuple[int, int], ...]

    @classmethod
    def from_cells(cls, cells: Iterable[tuple[int, int]]) -> "BenzenoidSpec":
        unique = sorted({(int(q), int(r)) for q, r in cells})
        if not unique:
            raise EmptyCellSetError()
        return cls(cells=tuple(unique))


@dataclass(frozen=True)
class BenzenoidGraph:
    """Molecular graph of a cell set, with per-edge direction labels.

    ``corner_coords[v]`` is the lattice position of vertex ``v``;
    ``cell_edges[c]`` lists the six edge ids around cell ``c`` in cyclic
    order, so opposite edges sit three apart. ``boundary_length`` counts
    the edges lying on only one cell, i.e. the perimeter cycle.
    """

    graph: Graph
    directions: tuple[int, ...]
    corner_coords: tuple[tuple[int, int], ...]
    cells: tuple[tuple[int, int], ...]
    cell_edges: tuple[tuple[int, ...], ...]
    boundary_length: int


def _check_cells_connected(cells: tuple[tuple[int, int], ...]) -> None:
    cell_set = set(cells)
    seen = {cells[0]}
    stack = [cells[0]]
    while stack:
        q, r = stack.pop()
        for dq, dr in _CELL_NEIGHBORS:
            nb = (q + dq, r + dr)
            if nb in cell_set and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    if len(seen) != len(cell_set):
        stranded = min(cell_set - seen)
        raise DisconnectedCellsError(stranded)


def build_benzenoid(spec: BenzenoidSpec) -> BenzenoidGraph:
    """Realize the cell set as a graph with direction-labeled edges.

    Vertices are the deduplicated hexagon corners, ordered
    lexicographically by lattice position; edges are sorted by endpoint
    ids. Raises :class:`EmptyCellSetError` or
    :class:`DisconnectedCellsError`.
    """

    cells = spec.cells
    if not cells:
        raise EmptyCellSetError()
    _check_cells_connected(cells)

    corner_lists: list[tuple[tuple[int, int], ...]] = []
    corner_set: set[tuple[int, int]] = set()
    for q, r in cells:
        cx = 3 * q
        cy = q + 2 * r
        corners = tuple((cx + ox, cy + oy) for ox, oy in _CORNER_OFFSETS)
        corner_lists.append(corners)
        corner_set.update(corners)

    coords = sorted(corner_set)
    vertex_id = {c: i for i, c in enumerate(coords)}

    # key: sorted endpoint-id pair -> [direction, number of incident cells]
    edge_info: dict[tuple[int, int], list[int]] = {}
    cell_edge_keys: list[tuple[tuple[int, int], ...]] = []
    for corners in corner_lists:
        keys = []
        for i in range(6):
            a = corners[i]
            b = corners[(i + 1) % 6]
            ia, ib = vertex_id[a], vertex_id[b]
            key = (ia, ib) if ia < ib else (ib, ia)
            info = edge_info.get(key)
            if info is None:
                edge_info[key] = [_direction_of(b[0] - a[0], b[1] - a[1]), 1]
            else:
                info[1] += 1
            keys.append(key)
        cell_edge_keys.append(tuple(keys))

    edge_keys = sorted(edge_info)
    edge_id = {key: e for e, key in enumerate(edge_keys)}
    directions = tuple(edge_info[key][0] for key in edge_keys)
    boundary_length = sum(1 for key in edge_keys if edge_info[key][1] == 1)
    cell_edges = tuple(
        tuple(edge_id[key] for key in keys) for keys in cell_edge_keys
    )

    n = len(coords)
    graph = Graph(
        n=n,
        edges=tuple(edge_keys),
        adjacency=_adjacency_from_edges(n, edge_keys),
    )
    return BenzenoidGraph(
        graph=graph,
        directions=directions,
        corner_coords=tuple(coords),
        cells=cells,
        cell_edges=cell_edges,
        boundary_length=boundary_length,
    )


def direction_partition(bg: BenzenoidGraph) -> EdgePartition:
    """The three edge classes of equal direction.

    Coarser than the closure classes by construction (every cut stays
    inside one direction), so the quotient decomposition applies without
    further validation.
    """

    classes: list[list[int]] = [[], [], []]
    for e, d in enumerate(bg.directions):
        classes[d].append(e)
    return edge_partition(bg.graph, classes)


@dataclass(frozen=True)
class ElementaryCut:
    """Maximal run of parallel edges crossing the system in one line."""

    edges: tuple[int, ...]
    direction: int


def elementary_cuts(bg: BenzenoidGraph) -> list[ElementaryCut]:
    """All elementary cuts, each the closure of opposite edges in a hexagon.

    Opposite edges of every hexagonal face share a direction; chaining
    that relation across fused cells yields the cuts, which coincide with
    the closure classes of the graph. Ordered by smallest edge id.
    """

    m = bg.graph.m
    parent = list(range(m))

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for keys in bg.cell_edges:
        for i in range(3):
            a, b = find(keys[i]), find(keys[i + 3])
            if a != b:
                parent[b] = a

    grouped: dict[int, list[int]] = {}
    for e in range(m):
        grouped.setdefault(find(e), []).append(e)
    cuts = sorted(grouped.values(), key=lambda ids: ids[0])
    return [ElementaryCut(edges=tuple(ids), direction=bg.directions[ids[0]]) for ids in cuts]


def quotient_trees(bg: BenzenoidGraph) -> tuple[QuotientGraph, QuotientGraph, QuotientGraph]:
    """Unit-weight quotients of the three direction classes.

    Each carries component vertex counts as vertex weights and fiber
    sizes as edge weights. The quotients of a benzenoid are always trees;
    a non-tree quotient means the cell set encloses a hole (or the
    construction broke) and raises ``RuntimeError``.
    """

    wg = unit_weights(bg.graph)
    partition = direction_partition(bg)
    quotients = []
    for d, cls in enumerate(partition.classes):
        q = build_quotient(wg, cls)
        if q.graph.m != q.graph.n - 1:
            raise RuntimeError(
                f"quotient of direction class {d} is not a tree "
                f"({q.graph.n} vertices, {q.graph.m} edges); "
                "the cell set likely encloses a hole"
            )
        quotients.append(q)
    return (quotients[0], quotients[1], quotients[2])


def mostar_benzenoid(bg: BenzenoidGraph, *, threads: int = 1) -> MostarReport:
    """Mostar index as the sum of the three quotient-tree values.

    End-to-end time is linear in the vertex count. ``per_class`` carries
    one summand per direction.
    """

    wg = unit_weights(bg.graph)
    partition = direction_partition(bg)

    def one(item: tuple[int, tuple[int, ...]]) -> ClassContribution:
        d, cls = item
        q = build_quotient(wg, cls)
        if q.graph.m != q.graph.n - 1:
            raise RuntimeError(
                f"quotient of direction class {d} is not a tree "
                f"({q.graph.n} vertices, {q.graph.m} edges); "
                "the cell set likely encloses a hole"
            )
        return ClassContribution(
            class_id=d,
            class_size=len(cls),
            quotient_vertices=q.graph.n,
            mostar=mostar_tree_linear(q.weighted).total,
        )

    items = list(enumerate(partition.classes))
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            contributions = list(pool.map(one, items))
    else:
        contributions = [one(item) for item in items]
    total = sum(c.mostar for c in contributions)
    return MostarReport(total=total, per_class=tuple(contributions))


def coronene(h: int) -> BenzenoidSpec:
    """Hexagonal flower of radius ``h - 1``: one cell ringed by ``h - 1`` layers.

    Contains ``3h^2 - 3h + 1`` cells.
    """

    if h < 1:
        raise ValueError(f"ring count must be at least 1, got {h}")
    radius = h - 1
    cells = [
        (q, r)
        for q in range(-radius, radius + 1)
        for r in range(max(-radius, -q - radius), min(radius, -q + radius) + 1)
    ]
    return BenzenoidSpec.from_cells(cells)


def coronene_closed_form(h: int) -> int:
    """Closed form of the flower family's Mostar index: ``27h^4 - 18h^3 - 9h^2``."""

    if h < 1:
        raise ValueError(f"ring count must be at least 1, got {h}")
    return 27 * h**4 - 18 * h**3 - 9 * h**2
