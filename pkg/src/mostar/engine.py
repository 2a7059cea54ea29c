"""Mostar index engines.

Three routes to the same number:

* :func:`mostar_direct` sums ``w'(e) * |n_u - n_v|`` straight from the
  definition (the brute-force oracle);
* :func:`mostar_by_cut` decomposes the sum over the quotient graphs of an
  edge partition coarser than the closure classes;
* :func:`mostar_tree_linear` handles weighted trees in a single traversal.

Integer weights flow through exact integer arithmetic on every route.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable

from .errors import NotATreeError, NotCPartitionError
from .graph import Graph, Weight, WeightedGraph, bfs_distances, build_graph
from .theta import EdgePartition, is_c_partition

__all__ = [
    "QuotientGraph",
    "ClassContribution",
    "MostarReport",
    "mostar_direct",
    "build_quotient",
    "mostar_by_cut",
    "mostar_tree_linear",
]

# Above this much estimated work (sources x edge scans) the direct engine
# switches from the pure-Python loop to the compiled kernel.
_BULK_WORK_THRESHOLD = 3_000_000

# Tree engine switches to its compiled kernel above this vertex count.
_TREE_BULK_THRESHOLD = 4096

_INT64_LIMIT = 2**62


@dataclass(frozen=True)
class QuotientGraph:
    """Contraction of a graph by one edge class.

    ``weighted`` is the quotient graph itself, carrying the aggregated
    vertex weights (component weight sums) and edge weights (fiber weight
    sums). ``vertex_map[v]`` names the quotient vertex holding original
    vertex ``v``; ``fibers[E]`` lists the original edge ids that collapse
    onto quotient edge ``E``.
    """

    weighted: WeightedGraph
    vertex_map: tuple[int, ...]
    fibers: tuple[tuple[int, ...], ...]

    @property
    def graph(self) -> Graph:
        return self.weighted.graph

    @property
    def vertex_weights(self) -> tuple[Weight, ...]:
        return self.weighted.vertex_weights

    @property
    def edge_weights(self) -> tuple[Weight, ...]:
        return self.weighted.edge_weights


@dataclass(frozen=True)
class ClassContribution:
    """One partition class's share of the decomposed total."""

    class_id: int
    class_size: int
    quotient_vertices: int
    mostar: Weight

    def as_pair(self) -> tuple[int, Weight]:
        return (self.class_id, self.mostar)


@dataclass(frozen=True)
class MostarReport:
    """Result of one engine run.

    ``per_edge`` holds each edge's contribution when the total was built
    edge by edge; ``per_class`` holds the per-quotient summands when it
    was built by decomposition. Whichever table is present sums to
    ``total`` exactly.
    """

    total: Weight
    per_class: tuple[ClassContribution, ...] | None = None
    per_edge: tuple[Weight, ...] | None = None

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "per_class": None
            if self.per_class is None
            else [
                {
                    "class_id": c.class_id,
                    "class_size": c.class_size,
                    "quotient_vertices": c.quotient_vertices,
                    "mostar": c.mostar,
                }
                for c in self.per_class
            ],
            "per_edge": None if self.per_edge is None else list(self.per_edge),
        }


def _side_sums_pure(wg: WeightedGraph) -> tuple[list[Weight], list[Weight]]:
    """Accumulate the near-u / near-v weight sums for every edge.

    One BFS per source vertex; each source deposits its weight on the
    side of every edge it is strictly closer to. Python integers keep the
    result exact for integral inputs.
    """

    g = wg.graph
    w = wg.vertex_weights
    zero = 0 if wg.is_integral else 0.0
    nu: list[Weight] = [zero] * g.m
    nv: list[Weight] = [zero] * g.m
    edges = g.edges
    for s in range(g.n):
        ws = w[s]
        if ws == 0:
            continue
        dist = bfs_distances(g, s)
        for e, (u, v) in enumerate(edges):
            du = dist[u]
            dv = dist[v]
            if du < dv:
                nu[e] += ws
            elif dv < du:
                nv[e] += ws
    return nu, nv


_kernels = None


def _load_kernels():
    """JIT-compile the compiled engine twins on first use."""

    global _kernels
    if _kernels is not None:
        return _kernels
    import numpy as np
    from numba import njit

    @njit(cache=True)
    def build_csr(n, eu, ev):  # pragma: no cover - compiled
        m = eu.shape[0]
        indptr = np.zeros(n + 1, dtype=np.int64)
        for e in range(m):
            indptr[eu[e] + 1] += 1
            indptr[ev[e] + 1] += 1
        for i in range(n):
            indptr[i + 1] += indptr[i]
        nbr = np.empty(2 * m, dtype=np.int32)
        nbr_edge = np.empty(2 * m, dtype=np.int32)
        pos = indptr[:n].copy()
        for e in range(m):
            u = eu[e]
            v = ev[e]
            nbr[pos[u]] = v
            nbr_edge[pos[u]] = e
            pos[u] += 1
            nbr[pos[v]] = u
            nbr_edge[pos[v]] = e
            pos[v] += 1
        return indptr, nbr, nbr_edge

    @njit(cache=True)
    def side_sums(n, eu, ev, w, nu, nv):  # pragma: no cover - compiled
        m = eu.shape[0]
        indptr, nbr, _ = build_csr(n, eu, ev)
        dist = np.empty(n, dtype=np.int32)
        queue = np.empty(n, dtype=np.int32)
        for s in range(n):
            ws = w[s]
            if ws == 0:
                continue
            dist[:] = -1
            dist[s] = 0
            queue[0] = s
            head = 0
            tail = 1
            while head < tail:
                x = queue[head]
                head += 1
                dx = dist[x] + 1
                for k in range(indptr[x], indptr[x + 1]):
                    y = nbr[k]
                    if dist[y] < 0:
                        dist[y] = dx
                        queue[tail] = y
                        tail += 1
            for e in range(m):
                du = dist[eu[e]]
                dv = dist[ev[e]]
                if du < dv:
                    nu[e] += ws
                elif dv < du:
                    nv[e] += ws

    @njit(cache=True)
    def tree_contributions(n, eu, ev, w, wp, out):  # pragma: no cover - compiled
        indptr, nbr, nbr_edge = build_csr(n, eu, ev)
        parent = np.full(n, -1, dtype=np.int32)
        parent_edge = np.empty(n, dtype=np.int32)
        order = np.empty(n, dtype=np.int32)
        parent[0] = 0
        order[0] = 0
        head = 0
        tail = 1
        while head < tail:
            x = order[head]
            head += 1
            for k in range(indptr[x], indptr[x + 1]):
                y = nbr[k]
                if parent[y] < 0:
                    parent[y] = x
                    parent_edge[y] = nbr_edge[k]
                    order[tail] = y
                    tail += 1
        subtree = w.copy()
        for i in range(n - 1, 0, -1):
            v = order[i]
            subtree[parent[v]] += subtree[v]
        total_weight = subtree[0]
        for i in range(1, n):
            v = order[i]
            e = parent_edge[v]
            out[e] = wp[e] * abs(total_weight - 2 * subtree[v])

    _kernels = (side_sums, tree_contributions)
    return _kernels


def _edge_endpoint_arrays(g: Graph):
    """Endpoint arrays (eu, ev), memoized on the immutable graph.

    The arrays are never written after creation, so the benign race on
    first concurrent access is harmless.
    """

    cached = g.__dict__.get("_endpoint_arrays")
    if cached is not None:
        return cached

    import itertools

    import numpy as np

    m = g.m
    flat = np.fromiter(itertools.chain.from_iterable(g.edges), dtype=np.int32, count=2 * m)
    pairs = flat.reshape(m, 2)
    arrays = (np.ascontiguousarray(pairs[:, 0]), np.ascontiguousarray(pairs[:, 1]))
    object.__setattr__(g, "_endpoint_arrays", arrays)
    return arrays


def _weight_arrays(wg: WeightedGraph):
    """Weight arrays, memoized on the immutable weighted graph."""

    cached = wg.__dict__.get("_weight_arrays")
    if cached is not None:
        return cached

    import numpy as np

    dtype = np.int64 if wg.is_integral else np.float64
    arrays = (
        np.asarray(wg.vertex_weights, dtype=dtype),
        np.asarray(wg.edge_weights, dtype=dtype),
    )
    object.__setattr__(wg, "_weight_arrays", arrays)
    return arrays


def _side_sums_bulk(wg: WeightedGraph) -> tuple[list[Weight], list[Weight]]:
    """Compiled twin of :func:`_side_sums_pure`; same source order, same sums."""

    import numpy as np

    g = wg.graph
    eu, ev = _edge_endpoint_arrays(g)
    w, _ = _weight_arrays(wg)
    nu = np.zeros(g.m, dtype=w.dtype)
    nv = np.zeros(g.m, dtype=w.dtype)
    _load_kernels()[0](g.n, eu, ev, w, nu, nv)
    return nu.tolist(), nv.tolist()


def _numba_available() -> bool:
    try:
        import numba  # noqa: F401
        import numpy  # noqa: F401
    except ImportError:
        return False
    return True


def _int64_safe(wg: WeightedGraph) -> bool:
    # bound every kernel intermediate: side sums (<= total), one edge
    # contribution (<= peak), and their sum over all edges
    cached = wg.__dict__.get("_int64_safe")
    if cached is not None:
        return cached
    if wg.is_integral:
        total = sum(wg.vertex_weights)
        peak = max(wg.edge_weights, default=0) * total
        safe = total < _INT64_LIMIT and wg.graph.m * peak < _INT64_LIMIT
    else:
        safe = True
    object.__setattr__(wg, "_int64_safe", safe)
    return safe


def _bulk_eligible(wg: WeightedGraph) -> bool:
    g = wg.graph
    if g.n * (g.n + 2 * g.m) < _BULK_WORK_THRESHOLD:
        return False
    return _int64_safe(wg) and _numba_available()


def mostar_direct(wg: WeightedGraph, *, _engine: str = "auto") -> MostarReport:
    """Mostar index straight from the definition; populates ``per_edge``.

    Every vertex deposits its weight on the nearer side of each edge;
    equidistant vertices count for neither side. Large graphs route
    through a compiled kernel that produces identical sums.
    """

    if _engine == "bulk" or (_engine == "auto" and _bulk_eligible(wg)):
        nu, nv = _side_sums_bulk(wg)
    else:
        nu, nv = _side_sums_pure(wg)
    wp = wg.edge_weights
    per_edge = [wp[e] * abs(nu[e] - nv[e]) for e in range(wg.graph.m)]
    return MostarReport(total=sum(per_edge), per_edge=tuple(per_edge))


def build_quotient(wg: WeightedGraph, class_edges: Iterable[int]) -> QuotientGraph:
    """Contract ``wg`` by one edge class.

    Quotient vertices are the components left after deleting the class;
    two components are adjacent when some deleted edge joins them, and
    that edge lands in the quotient edge's fiber. Weights aggregate by
    component (vertices) and by fiber (edges).
    """

    g = wg.graph
    class_ids = sorted(set(class_edges))
    for e in class_ids:
        if not (0 <= e < g.m):
            raise ValueError(f"edge id {e} out of range 0..{g.m - 1}")
    removed = frozenset(class_ids)

    labels = [-1] * g.n
    adjacency = g.adjacency
    count = 0
    queue: list[int] = []
    for start in range(g.n):
        if labels[start] >= 0:
            continue
        labels[start] = count
        queue.append(start)
        while queue:
            x = queue.pop()
            for y, eid in adjacency[x]:
                if labels[y] < 0 and eid not in removed:
                    labels[y] = count
                    queue.append(y)
        count += 1

    lam_list: list[Weight] = [0] * count
    w = wg.vertex_weights
    for v in range(g.n):
        lam_list[labels[v]] += w[v]

    fiber_map: dict[tuple[int, int], list[int]] = {}
    edges_of = g.edges
    for e in class_ids:
        u, v = edges_of[e]
        a, b = labels[u], labels[v]
        if a == b:
            continue
        key = (a, b) if a < b else (b, a)
        fiber_map.setdefault(key, []).append(e)

    wp = wg.edge_weights
    quotient_edges = sorted(fiber_map)
    fibers = tuple(tuple(fiber_map[key]) for key in quotient_edges)
    lam_prime = tuple(sum(wp[e] for e in fiber) for fiber in fibers)
    base = build_graph(count, quotient_edges)
    weighted = WeightedGraph(base, tuple(lam_list), lam_prime)
    return QuotientGraph(weighted=weighted, vertex_map=tuple(labels), fibers=fibers)


def _quotient_mostar(q: QuotientGraph) -> Weight:
    """Mostar value of one quotient; trees take the linear route."""

    g = q.graph
    if g.m == g.n - 1:
        return mostar_tree_linear(q.weighted).total
    return mostar_direct(q.weighted).total


def mostar_by_cut(
    wg: WeightedGraph,
    partition: EdgePartition,
    *,
    validate: bool = True,
    threads: int = 1,
) -> MostarReport:
    """Mostar index as the sum over the partition's quotient graphs.

    The decomposition is only sound for partitions coarser than the
    closure classes, so the hypothesis is checked up front unless the
    caller opts out (safe for constructed-correct partitions such as the
    benzenoid direction classes). Raises :class:`NotCPartitionError` when
    the check fails.
    """

    if validate and not is_c_partition(wg.graph, partition):
        raise NotCPartitionError(
            "partition splits a closure class; the quotient decomposition would be unsound"
        )

    def one(item: tuple[int, tuple[int, ...]]) -> ClassContribution:
        ci, cls = item
        q = build_quotient(wg, cls)
        return ClassContribution(
            class_id=ci,
            class_size=len(cls),
            quotient_vertices=q.graph.n,
            mostar=_quotient_mostar(q),
        )

    items = list(enumerate(partition.classes))
    if threads > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            contributions = list(pool.map(one, items))
    else:
        contributions = [one(item) for item in items]
    total = sum(c.mostar for c in contributions)
    return MostarReport(total=total, per_class=tuple(contributions))


def _tree_contributions_pure(wt: WeightedGraph) -> list[Weight]:
    g = wt.graph
    n = g.n
    parent = [-1] * n
    parent_edge = [-1] * n
    order = [0] * n
    head = 0
    tail = 1
    parent[0] = 0
    adjacency = g.adjacency
    while head < tail:
        x = order[head]
        head += 1
        for y, eid in adjacency[x]:
            if parent[y] < 0:
                parent[y] = x
                parent_edge[y] = eid
                order[tail] = y
                tail += 1
    subtree = list(wt.vertex_weights)
    for i in range(n - 1, 0, -1):
        v = order[i]
        subtree[parent[v]] += subtree[v]
    total_weight = subtree[0]
    wp = wt.edge_weights
    zero = 0 if wt.is_integral else 0.0
    per_edge: list[Weight] = [zero] * g.m
    for i in range(1, n):
        v = order[i]
        e = parent_edge[v]
        per_edge[e] = wp[e] * abs(total_weight - 2 * subtree[v])
    return per_edge


def _tree_report_bulk(wt: WeightedGraph, include_per_edge: bool) -> MostarReport:
    import numpy as np

    g = wt.graph
    eu, ev = _edge_endpoint_arrays(g)
    w, wp = _weight_arrays(wt)
    out = np.zeros(g.m, dtype=w.dtype)
    _load_kernels()[1](g.n, eu, ev, w, wp, out)
    if not include_per_edge:
        total = out.sum()
        return MostarReport(total=int(total) if wt.is_integral else float(total))
    per_edge = out.tolist()
    return MostarReport(total=sum(per_edge), per_edge=tuple(per_edge))


def mostar_tree_linear(wt: WeightedGraph, *, include_per_edge: bool = True) -> MostarReport:
    """Mostar index of a weighted tree in one traversal.

    Roots the tree at vertex 0 with an iterative order computation (no
    recursion, so path-like trees of any depth are fine), accumulates
    subtree weights bottom-up, and reads each edge's contribution off the
    subtree weight below it. Exactly matches :func:`mostar_direct`. Large
    trees route through a compiled kernel computing the same numbers;
    ``include_per_edge=False`` skips materializing the per-edge table.
    """

    g = wt.graph
    if g.m != g.n - 1:
        raise NotATreeError(g.n, g.m)
    if g.n >= _TREE_BULK_THRESHOLD and _int64_safe(wt) and _numba_available():
        return _tree_report_bulk(wt, include_per_edge)
    per_edge = _tree_contributions_pure(wt)
    if not include_per_edge:
        return MostarReport(total=sum(per_edge))
    return MostarReport(total=sum(per_edge), per_edge=tuple(per_edge))
