"""Shared builders, generators, and independent oracles for the tests."""

from __future__ import annotations

import random

from mostar import (
    BenzenoidSpec,
    Graph,
    WeightedGraph,
    build_graph,
)

# ---------------------------------------------------------------------------
# Small named graphs
# ---------------------------------------------------------------------------


def cycle(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    # center is vertex 0
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def fullerene_patch() -> Graph:
    """Central pentagon (0..4) ringed by five hexagons; 20 vertices, 25 edges.

    Outer ring is the 15-cycle 5..19 with spokes i -> 5 + 3i.
    """

    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, 5 + 3 * i) for i in range(5)]
    edges += [(5 + j, 5 + (j + 1) % 15) for j in range(15)]
    return build_graph(20, edges)


# Transcription of the published branched 7-hexagon example: two vertical
# triples bridged by a middle cell. Its quotient trees and totals pin the
# orientation (direction 0 carries the 112 summand).
BRANCHED_CELLS = ((0, 0), (0, 1), (0, 2), (1, 0), (2, -1), (2, 0), (2, 1))


def branched_benzenoid_spec() -> BenzenoidSpec:
    return BenzenoidSpec.from_cells(BRANCHED_CELLS)


# ---------------------------------------------------------------------------
# Random generators (all seeded by the caller)
# ---------------------------------------------------------------------------


def random_connected_graph(rng: random.Random, n: int, extra: float = 0.3) -> Graph:
    """Random spanning tree plus density-``extra`` chords, shuffled edge ids."""

    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        u, v = order[rng.randrange(i)], order[i]
        edges.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra:
                edges.add((u, v))
    edge_list = sorted(edges)
    rng.shuffle(edge_list)
    return build_graph(n, edge_list)


def random_tree(rng: random.Random, n: int) -> Graph:
    order = list(range(n))
    rng.shuffle(order)
    edges = [(order[rng.randrange(i)], order[i]) for i in range(1, n)]
    rng.shuffle(edges)
    return build_graph(n, edges)


def random_int_weighted(rng: random.Random, g: Graph, lo: int = 0, hi: int = 5) -> WeightedGraph:
    return WeightedGraph(
        g,
        tuple(rng.randint(lo, hi) for _ in range(g.n)),
        tuple(rng.randint(lo, hi) for _ in range(g.m)),
    )


_CELL_NEIGHBORS = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1))


def _fill_holes(cells: set[tuple[int, int]]) -> set[tuple[int, int]]:
    """Add any absent cells unreachable from outside the bounding box.

    Cell sets that ring an absent cell describe coronoids, which the
    hexagonal pipeline's structural claims do not cover; filling keeps
    random samples inside the claimed family.
    """

    qs = [q for q, _ in cells]
    rs = [r for _, r in cells]
    lo_q, hi_q = min(qs) - 1, max(qs) + 1
    lo_r, hi_r = min(rs) - 1, max(rs) + 1
    outside = set()
    stack = [(lo_q, lo_r)]
    box = {
        (q, r)
        for q in range(lo_q, hi_q + 1)
        for r in range(lo_r, hi_r + 1)
        if (q, r) not in cells
    }
    while stack:
        cell = stack.pop()
        if cell in outside or cell not in box:
            continue
        outside.add(cell)
        q, r = cell
        for dq, dr in _CELL_NEIGHBORS:
            stack.append((q + dq, r + dr))
    holes = box - outside
    return cells | holes


def random_benzenoid_cells(rng: random.Random, max_cells: int) -> list[tuple[int, int]]:
    """Random connected, hole-free cell set with at most ``max_cells`` cells."""

    while True:
        k = rng.randint(1, max_cells)
        cells = {(0, 0)}
        while len(cells) < k:
            frontier = sorted(
                {
                    (q + dq, r + dr)
                    for q, r in cells
                    for dq, dr in _CELL_NEIGHBORS
                }
                - cells
            )
            cells.add(frontier[rng.randrange(len(frontier))])
        cells = _fill_holes(cells)
        if len(cells) <= max_cells:
            return sorted(cells)


# ---------------------------------------------------------------------------
# Independent oracles
# ---------------------------------------------------------------------------


def floyd_warshall(g: Graph) -> list[list[int]]:
    """All-pairs distances by the cubic recurrence; independent of BFS."""

    big = g.n + 1
    dist = [[big] * g.n for _ in range(g.n)]
    for i in range(g.n):
        dist[i][i] = 0
    for u, v in g.edges:
        dist[u][v] = 1
        dist[v][u] = 1
    for k in range(g.n):
        dk = dist[k]
        for i in range(g.n):
            dik = dist[i][k]
            if dik >= big:
                continue
            di = dist[i]
            for j in range(g.n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return dist
