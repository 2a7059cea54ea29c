"""Text format parsing and serialization."""

import pytest

from mostar import ParseError, build_quotient, theta_star_partition, unit_weights
from mostar.io import (
    format_partition,
    format_quotient,
    format_weighted_graph,
    load_cells,
    load_graph,
    load_partition_classes,
    load_weighted_graph,
)

from helpers import cycle


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return p


# ---------------------------------------------------------------------------
# graph files
# ---------------------------------------------------------------------------


def test_load_unweighted_graph(tmp_path):
    p = write(tmp_path, "c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n")
    wg = load_weighted_graph(p)
    assert wg.graph.edges == ((0, 1), (1, 2), (2, 3), (3, 0))
    assert wg.vertex_weights == (1, 1, 1, 1)
    assert wg.edge_weights == (1, 1, 1, 1)


def test_load_weighted_graph(tmp_path):
    p = write(tmp_path, "p3.txt", "3 2\n0 1\n1 2\n2 0 3\n1 4\n")
    wg = load_weighted_graph(p)
    assert wg.vertex_weights == (2, 0, 3)
    assert wg.edge_weights == (1, 4)
    assert wg.is_integral


def test_load_graph_with_comments_and_blank_lines(tmp_path):
    p = write(tmp_path, "g.txt", "# a triangle\n\n3 3\n0 1\n1 2  # last two\n2 0\n")
    g = load_graph(p)
    assert g.m == 3


def test_load_graph_float_weights(tmp_path):
    p = write(tmp_path, "g.txt", "2 1\n0 1\n0.5 1.25\n2.0\n")
    wg = load_weighted_graph(p)
    assert wg.vertex_weights == (0.5, 1.25)
    assert wg.edge_weights == (2.0,)
    assert not wg.is_integral


@pytest.mark.parametrize(
    "text,line",
    [
        ("", 1),
        ("4\n", 1),
        ("2 x\n", 1),
        ("2 1\n0\n", 2),
        ("2 1\n0 one\n", 2),
        ("2 2\n0 1\n", 2),
        ("2 1\n0 1\n1 1\n", 3),
        ("2 1\n0 1\n1\n1\n", 3),
        ("2 1\n0 1\n1 -2\n1\n", 3),
    ],
)
def test_malformed_graph_files_name_the_line(tmp_path, text, line):
    p = write(tmp_path, "bad.txt", text)
    with pytest.raises(ParseError) as exc:
        load_weighted_graph(p)
    assert exc.value.line == line
    assert str(p) in str(exc.value)


def test_graph_round_trip(tmp_path):
    g = cycle(5)
    wg = unit_weights(g)
    p = write(tmp_path, "c5.txt", format_weighted_graph(wg))
    assert load_weighted_graph(p) == wg


# ---------------------------------------------------------------------------
# partition files
# ---------------------------------------------------------------------------


def test_partition_round_trip(tmp_path):
    part = theta_star_partition(cycle(4))
    p = write(tmp_path, "part.txt", format_partition(part))
    assert load_partition_classes(p) == [[0, 2], [1, 3]]


def test_partition_file_rejects_junk(tmp_path):
    p = write(tmp_path, "part.txt", "0 1\n2 x\n")
    with pytest.raises(ParseError) as exc:
        load_partition_classes(p)
    assert exc.value.line == 2


def test_empty_partition_file_is_rejected(tmp_path):
    p = write(tmp_path, "part.txt", "# nothing\n")
    with pytest.raises(ParseError):
        load_partition_classes(p)


# ---------------------------------------------------------------------------
# cell files
# ---------------------------------------------------------------------------


def test_load_cells(tmp_path):
    p = write(tmp_path, "cells.txt", "# two fused hexagons\n0 0\n1 0\n")
    spec = load_cells(p)
    assert spec.cells == ((0, 0), (1, 0))


def test_load_cells_deduplicates(tmp_path):
    p = write(tmp_path, "cells.txt", "0 0\n0 0\n1 0\n")
    assert load_cells(p).cells == ((0, 0), (1, 0))


@pytest.mark.parametrize("text", ["0\n", "0 0 0\n", "a b\n", ""])
def test_malformed_cell_files(tmp_path, text):
    p = write(tmp_path, "cells.txt", text)
    with pytest.raises(ParseError):
        load_cells(p)


# ---------------------------------------------------------------------------
# quotient output
# ---------------------------------------------------------------------------


def test_quotient_output_is_loadable(tmp_path):
    g = cycle(6)
    q = build_quotient(unit_weights(g), {0, 3})
    text = format_quotient(q, fibers=True)
    assert "# fiber 0: 0 3" in text
    p = write(tmp_path, "q.txt", text)
    wg = load_weighted_graph(p)
    assert wg == q.weighted
