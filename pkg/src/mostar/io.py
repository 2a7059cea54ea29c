"""Plain-text input and output formats.

Graph files: first line ``n m``, then m lines ``u v`` (0-based). The
weighted variant appends one line of n vertex weights and one line of m
edge weights, in id order. Partition files: one line per class, edge ids
whitespace-separated. Cell files: one ``q r`` axial pair per line.
Blank lines and ``#`` comments are ignored everywhere.
"""

from __future__ import annotations

from pathlib import Path

from .benzenoid import BenzenoidSpec
from .engine import QuotientGraph
from .errors import ParseError
from .graph import Graph, Weight, WeightedGraph, build_graph, unit_weights
from .theta import EdgePartition

__all__ = [
    "load_weighted_graph",
    "load_graph",
    "load_partition_classes",
    "load_cells",
    "format_weighted_graph",
    "format_partition",
    "format_quotient",
]


def _content_lines(text: str, path: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            out.append((lineno, stripped.split()))
    return out


def _parse_int(token: str, path: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected integer {what}, got {token!r}", path=path, line=lineno)


def _parse_weight(token: str, path: str, lineno: int) -> Weight:
    value: Weight
    try:
        value = int(token)
    except ValueError:
        try:
            value = float(token)
        except ValueError:
            raise ParseError(f"expected numeric weight, got {token!r}", path=path, line=lineno)
    if value < 0:
        raise ParseError(f"negative weight {token!r}", path=path, line=lineno)
    return value


def load_weighted_graph(path: str | Path) -> WeightedGraph:
    """Read a graph file; absent weight lines mean unit weights.

    Graph-validity errors (self-loop, duplicate edge, disconnected, bad
    vertex id) propagate as their own exception types; shape and token
    problems raise :class:`ParseError` with the line number.
    """

    path = Path(path)
    name = str(path)
    lines = _content_lines(path.read_text(), name)
    if not lines:
        raise ParseError("empty graph file", path=name, line=1)
    lineno, header = lines[0]
    if len(header) != 2:
        raise ParseError(f"header must be 'n m', got {' '.join(header)!r}", path=name, line=lineno)
    n = _parse_int(header[0], name, lineno, "vertex count")
    m = _parse_int(header[1], name, lineno, "edge count")
    if n < 1 or m < 0:
        raise ParseError(f"invalid sizes n={n} m={m}", path=name, line=lineno)
    if len(lines) - 1 < m:
        raise ParseError(
            f"expected {m} edge lines, found {len(lines) - 1}", path=name, line=lines[-1][0]
        )
    edges = []
    for lineno, tokens in lines[1 : 1 + m]:
        if len(tokens) != 2:
            raise ParseError(
                f"edge line must be 'u v', got {' '.join(tokens)!r}", path=name, line=lineno
            )
        u = _parse_int(tokens[0], name, lineno, "vertex id")
        v = _parse_int(tokens[1], name, lineno, "vertex id")
        edges.append((u, v))
    rest = lines[1 + m :]
    graph = build_graph(n, edges)
    if not rest:
        return unit_weights(graph)
    if len(rest) != 2:
        raise ParseError(
            f"expected exactly 2 weight lines after the edges, found {len(rest)}",
            path=name,
            line=rest[0][0],
        )
    (wline, wtokens), (eline, etokens) = rest
    if len(wtokens) != n:
        raise ParseError(f"expected {n} vertex weights, got {len(wtokens)}", path=name, line=wline)
    if len(etokens) != m:
        raise ParseError(f"expected {m} edge weights, got {len(etokens)}", path=name, line=eline)
    vertex_weights = tuple(_parse_weight(t, name, wline) for t in wtokens)
    edge_weights = tuple(_parse_weight(t, name, eline) for t in etokens)
    return WeightedGraph(graph, vertex_weights, edge_weights)


def load_graph(path: str | Path) -> Graph:
    """Read a graph file, ignoring any weight lines."""

    return load_weighted_graph(path).graph


def load_partition_classes(path: str | Path) -> list[list[int]]:
    """Read raw partition classes; validation against a graph happens later."""

    path = Path(path)
    name = str(path)
    lines = _content_lines(path.read_text(), name)
    if not lines:
        raise ParseError("empty partition file", path=name, line=1)
    classes = []
    for lineno, tokens in lines:
        classes.append([_parse_int(t, name, lineno, "edge id") for t in tokens])
    return classes


def load_cells(path: str | Path) -> BenzenoidSpec:
    """Read axial cell coordinates, one ``q r`` pair per line."""

    path = Path(path)
    name = str(path)
    lines = _content_lines(path.read_text(), name)
    cells = []
    for lineno, tokens in lines:
        if len(tokens) != 2:
            raise ParseError(
                f"cell line must be 'q r', got {' '.join(tokens)!r}", path=name, line=lineno
            )
        q = _parse_int(tokens[0], name, lineno, "axial coordinate")
        r = _parse_int(tokens[1], name, lineno, "axial coordinate")
        cells.append((q, r))
    if not cells:
        raise ParseError("empty cell file", path=name, line=1)
    return BenzenoidSpec.from_cells(cells)


def _format_weight(w: Weight) -> str:
    return repr(w) if isinstance(w, float) else str(w)


def format_weighted_graph(wg: WeightedGraph) -> str:
    """Serialize in the graph file format, weight lines included."""

    g = wg.graph
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    out.append(" ".join(_format_weight(w) for w in wg.vertex_weights))
    out.append(" ".join(_format_weight(w) for w in wg.edge_weights))
    return "\n".join(out) + "\n"


def format_partition(partition: EdgePartition) -> str:
    """Serialize classes in the partition file format (re-loadable)."""

    return "\n".join(" ".join(str(e) for e in cls) for cls in partition.classes) + "\n"


def format_quotient(q: QuotientGraph, *, fibers: bool = False) -> str:
    """Serialize a quotient as a weighted graph file.

    With ``fibers`` set, appends comment lines mapping each quotient edge
    to its original edge ids; the output stays loadable.
    """

    out = format_weighted_graph(q.weighted)
    if fibers:
        lines = [
            f"# fiber {e}: {' '.join(str(x) for x in fiber)}"
            for e, fiber in enumerate(q.fibers)
        ]
        out += "\n".join(lines) + "\n"
    return out
