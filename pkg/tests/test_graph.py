"""Graph construction, BFS distances, edge splits, component labeling."""

import random

import pytest

from mostar import (
    DisconnectedError,
    DuplicateEdgeError,
    IndexOutOfRangeError,
    SelfLoopError,
    all_pairs_distances,
    bfs_distances,
    build_graph,
    components_after_removal,
    edge_split,
)

from helpers import cycle, floyd_warshall, path, random_connected_graph, random_tree, star

# ---------------------------------------------------------------------------
# build_graph
# ---------------------------------------------------------------------------


def test_build_p2():
    g = build_graph(2, [(0, 1)])
    assert g.n == 2
    assert g.m == 1
    assert g.edges == ((0, 1),)


def test_build_c6():
    g = cycle(6)
    assert g.n == 6
    assert g.m == 6
    assert all(g.degree(v) == 2 for v in range(6))


def test_build_rejects_self_loop():
    with pytest.raises(SelfLoopError) as exc:
        build_graph(3, [(0, 1), (2, 2)])
    assert exc.value.edge_index == 1
    assert exc.value.vertex == 2


def test_build_rejects_duplicate_edge():
    with pytest.raises(DuplicateEdgeError) as exc:
        build_graph(3, [(0, 1), (1, 2), (1, 0)])
    assert exc.value.edge_index == 2


def test_build_rejects_disconnected():
    with pytest.raises(DisconnectedError):
        build_graph(4, [(0, 1), (2, 3)])


def test_build_rejects_bad_vertex_id():
    with pytest.raises(IndexOutOfRangeError) as exc:
        build_graph(3, [(0, 1), (1, 3)])
    assert exc.value.vertex == 3
    with pytest.raises(IndexOutOfRangeError):
        build_graph(3, [(0, -1), (1, 2)])


def test_build_rejects_empty_vertex_set():
    with pytest.raises(ValueError):
        build_graph(0, [])


def test_single_vertex_graph_is_valid():
    g = build_graph(1, [])
    assert g.n == 1
    assert g.m == 0


# ---------------------------------------------------------------------------
# bfs_distances
# ---------------------------------------------------------------------------


def test_bfs_c6():
    assert bfs_distances(cycle(6), 0) == [0, 1, 2, 3, 2, 1]


def test_bfs_p2():
    assert bfs_distances(build_graph(2, [(0, 1)]), 0) == [0, 1]


def test_bfs_star_from_leaf():
    # center is vertex 0; from a leaf the other leaves sit at distance 2
    assert bfs_distances(star(3), 1) == [1, 0, 2, 2]


def test_bfs_rejects_bad_source():
    with pytest.raises(ValueError):
        bfs_distances(cycle(4), 4)


def test_bfs_matches_floyd_warshall_and_is_symmetric():
    rng = random.Random(7)
    for _ in range(25):
        g = random_connected_graph(rng, rng.randint(2, 12))
        table = all_pairs_distances(g)
        oracle = floyd_warshall(g)
        assert table == oracle
        for u in range(g.n):
            for v in range(g.n):
                assert table[u][v] == table[v][u]


# ---------------------------------------------------------------------------
# edge_split
# ---------------------------------------------------------------------------


def test_edge_split_even_cycle_is_balanced():
    g = cycle(6)
    for e in range(g.m):
        s = edge_split(g, e)
        assert len(s.near_u) == 3
        assert len(s.near_v) == 3
        assert not s.equidistant


def test_edge_split_odd_cycle_has_one_equidistant():
    g = cycle(5)
    for e in range(g.m):
        s = edge_split(g, e)
        assert (len(s.near_u), len(s.near_v), len(s.equidistant)) == (2, 2, 1)


def test_edge_split_star_edge():
    g = star(3)
    s = edge_split(g, 0)  # edge (center=0, leaf=1)
    assert s.near_u == frozenset({0, 2, 3})
    assert s.near_v == frozenset({1})
    assert not s.equidistant


def test_edge_split_contains_endpoints_and_partitions_vertices():
    rng = random.Random(11)
    for _ in range(25):
        g = random_connected_graph(rng, rng.randint(2, 12))
        for e in range(g.m):
            u, v = g.edges[e]
            s = edge_split(g, e)
            assert u in s.near_u
            assert v in s.near_v
            assert s.near_u | s.near_v | s.equidistant == set(range(g.n))
            assert not (s.near_u & s.near_v)
            assert not (s.near_u & s.equidistant)
            assert not (s.near_v & s.equidistant)


def test_edge_split_bipartite_graphs_have_no_equidistant_vertices():
    rng = random.Random(13)
    graphs = [cycle(4), cycle(6), cycle(10), path(9)]
    graphs += [random_tree(rng, rng.randint(2, 30)) for _ in range(10)]
    for g in graphs:
        for e in range(g.m):
            s = edge_split(g, e)
            assert len(s.near_u) + len(s.near_v) == g.n


def test_edge_split_accepts_precomputed_distances():
    g = cycle(5)
    u, v = g.edges[2]
    s = edge_split(g, 2, dist_u=bfs_distances(g, u), dist_v=bfs_distances(g, v))
    assert s == edge_split(g, 2)


def test_edge_split_rejects_bad_edge_id():
    with pytest.raises(ValueError):
        edge_split(cycle(4), 4)


# ---------------------------------------------------------------------------
# components_after_removal
# ---------------------------------------------------------------------------


def test_components_nothing_removed():
    labels, count = components_after_removal(cycle(6), ())
    assert count == 1
    assert labels == [0] * 6


def test_components_opposite_cycle_edges():
    # removing edges (0,1) and (3,4) of C6 leaves two 3-vertex arcs
    labels, count = components_after_removal(cycle(6), {0, 3})
    assert count == 2
    assert labels == [0, 1, 1, 1, 0, 0]


def test_components_all_edges_removed():
    g = cycle(5)
    labels, count = components_after_removal(g, range(g.m))
    assert count == 5
    assert labels == [0, 1, 2, 3, 4]


def test_components_labels_are_dense_and_deterministic():
    rng = random.Random(3)
    for _ in range(20):
        g = random_connected_graph(rng, rng.randint(2, 10))
        removed = {e for e in range(g.m) if rng.random() < 0.5}
        labels, count = components_after_removal(g, removed)
        assert set(labels) == set(range(count))
        again, count2 = components_after_removal(g, removed)
        assert (labels, count) == (again, count2)


def test_components_rejects_bad_edge_id():
    with pytest.raises(ValueError):
        components_after_removal(cycle(4), {7})
