"""Command-line front end.

Subcommands: ``mostar`` (graph file -> index by the chosen method),
``theta`` (closure classes of a graph file, printed in the partition
file format), ``quotient`` (weighted quotient of one partition class),
``benzenoid`` (cell file -> index with per-tree breakdown), ``coronene``
(flower family generator checked against its closed form).

Exit codes: 0 success; 1 verification mismatch; 2 unparseable input;
3 partition not coarser than the closure classes; 4 disconnected input;
5 other invalid input. Output is byte-deterministic for a fixed input
and flag set.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import io as formats
from .benzenoid import (
    build_benzenoid,
    coronene,
    coronene_closed_form,
    mostar_benzenoid,
)
from .engine import MostarReport, build_quotient, mostar_by_cut, mostar_direct
from .errors import (
    DisconnectedCellsError,
    DisconnectedError,
    MostarError,
    NotCPartitionError,
    ParseError,
)
from .graph import WeightedGraph
from .theta import EdgePartition, edge_partition, theta_star_partition

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_NOT_C_PARTITION = 3
EXIT_DISCONNECTED = 4
EXIT_INVALID = 5

# Largest edge count the auto method will spend O(m^2) closure work on.
DEFAULT_AUTO_THRESHOLD = 5000


@dataclass(frozen=True)
class RunConfig:
    """One CLI invocation, normalized.

    Exactly one input source is set: ``input_path`` for file-driven
    commands, ``h`` for the generator. ``method=cut`` always carries a
    partition source (``theta-star`` unless a file was given).
    """

    command: str
    input_path: Path | None = None
    method: str = "auto"
    partition_source: str = "theta-star"
    partition_path: Path | None = None
    output_format: str = "text"
    emit_breakdown: bool = False
    skip_validation: bool = False
    check: bool = False
    auto_threshold: int = DEFAULT_AUTO_THRESHOLD
    threads: int = 1
    h: int | None = None
    class_index: int = 0

    def __post_init__(self):
        sources = (self.input_path is not None) + (self.h is not None)
        if sources != 1:
            raise ValueError("exactly one input source is required")


def _default_threads() -> int:
    raw = os.environ.get("MOSTAR_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mostar",
        description="Mostar index of connected graphs and benzenoid systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format",
            choices=("text", "structured"),
            default="text",
            help="text report or JSON mirroring the report fields",
        )

    p = sub.add_parser("mostar", help="Mostar index of a (weighted) graph file")
    p.add_argument("input", type=Path, help="graph file: 'n m', edge lines, optional weight lines")
    p.add_argument("--method", choices=("direct", "cut", "auto"), default="auto")
    p.add_argument(
        "--partition",
        choices=("theta-star", "file"),
        default="theta-star",
        help="partition source for --method cut",
    )
    p.add_argument("--partition-file", type=Path, help="partition file (implies --partition file)")
    p.add_argument("--check", action="store_true", help="run direct and cut, fail on mismatch")
    p.add_argument("--emit-breakdown", action="store_true", help="include the per-edge table")
    p.add_argument(
        "--skip-validation",
        action="store_true",
        help="trust the partition to be coarser than the closure classes",
    )
    p.add_argument(
        "--auto-threshold",
        type=int,
        default=DEFAULT_AUTO_THRESHOLD,
        help="auto picks cut when the edge count is at most this",
    )
    p.add_argument("--threads", type=int, default=None, help="per-class worker threads")
    add_format(p)

    p = sub.add_parser("theta", help="closure classes of a graph file")
    p.add_argument("input", type=Path)
    add_format(p)

    p = sub.add_parser("quotient", help="weighted quotient of one partition class")
    p.add_argument("input", type=Path)
    p.add_argument("--class-index", type=int, default=0)
    p.add_argument("--partition-file", type=Path, help="partition file (default: closure classes)")
    p.add_argument("--emit-breakdown", action="store_true", help="append fiber comments")
    add_format(p)

    p = sub.add_parser("benzenoid", help="Mostar index of a hexagonal cell file")
    p.add_argument("input", type=Path, help="cell file: one 'q r' axial pair per line")
    p.add_argument("--threads", type=int, default=None)
    add_format(p)

    p = sub.add_parser("coronene", help="flower family: compute and check the closed form")
    p.add_argument("--h", type=int, required=True, dest="h", help="number of rings (1 = one hexagon)")
    add_format(p)

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    threads = getattr(args, "threads", None)
    if threads is None:
        threads = _default_threads()
    partition_path = getattr(args, "partition_file", None)
    partition_source = getattr(args, "partition", "theta-star")
    if partition_path is not None:
        partition_source = "file"
    elif partition_source == "file":
        raise ParseError("--partition file requires --partition-file PATH")
    return RunConfig(
        command=args.command,
        input_path=getattr(args, "input", None),
        method=getattr(args, "method", "auto"),
        partition_source=partition_source,
        partition_path=partition_path,
        output_format=getattr(args, "format", "text"),
        emit_breakdown=getattr(args, "emit_breakdown", False),
        skip_validation=getattr(args, "skip_validation", False),
        check=getattr(args, "check", False),
        auto_threshold=getattr(args, "auto_threshold", DEFAULT_AUTO_THRESHOLD),
        threads=max(1, threads),
        h=getattr(args, "h", None),
        class_index=getattr(args, "class_index", 0),
    )


def _values_equal(a, b) -> bool:
    if isinstance(a, int) and isinstance(b, int):
        return a == b
    return math.isclose(a, b, rel_tol=1e-9, abs_tol=1e-9)


def _render_report(rep: MostarReport, out, *, breakdown: bool) -> None:
    print(f"total: {rep.total}", file=out)
    if rep.per_class is not None:
        print("per-class:", file=out)
        for c in rep.per_class:
            print(
                f"  {c.class_id}: size={c.class_size} "
                f"quotient_vertices={c.quotient_vertices} mostar={c.mostar}",
                file=out,
            )
    if breakdown and rep.per_edge is not None:
        print("per-edge:", file=out)
        for e, contribution in enumerate(rep.per_edge):
            print(f"  {e}: {contribution}", file=out)


def _emit_structured(payload: dict, out) -> None:
    print(json.dumps(payload, indent=2), file=out)


def _resolve_partition(config: RunConfig, wg: WeightedGraph) -> EdgePartition:
    if config.partition_source == "file":
        classes = formats.load_partition_classes(config.partition_path)
        return edge_partition(wg.graph, classes)
    return theta_star_partition(wg.graph)


def _cmd_mostar(config: RunConfig, out) -> int:
    wg = formats.load_weighted_graph(config.input_path)
    method = config.method
    if method == "auto":
        method = "cut" if wg.graph.m <= config.auto_threshold else "direct"

    if method == "direct":
        rep = mostar_direct(wg)
    else:
        partition = _resolve_partition(config, wg)
        rep = mostar_by_cut(
            wg, partition, validate=not config.skip_validation, threads=config.threads
        )

    if config.check:
        direct_total = mostar_direct(wg).total if method != "direct" else rep.total
        if method != "direct":
            cut_rep = rep
        else:
            validate = config.partition_source == "file" and not config.skip_validation
            cut_rep = mostar_by_cut(wg, _resolve_partition(config, wg), validate=validate)
        if not _values_equal(direct_total, cut_rep.total):
            print(
                f"check failed: direct={direct_total} cut={cut_rep.total}",
                file=sys.stderr,
            )
            return EXIT_MISMATCH

    if config.output_format == "structured":
        _emit_structured(rep.to_dict(), out)
    else:
        _render_report(rep, out, breakdown=config.emit_breakdown)
        if config.check:
            print("check: direct and cut totals agree", file=out)
    return EXIT_OK


def _cmd_theta(config: RunConfig, out) -> int:
    g = formats.load_graph(config.input_path)
    partition = theta_star_partition(g)
    if config.output_format == "structured":
        _emit_structured({"classes": [list(c) for c in partition.classes]}, out)
    else:
        out.write(formats.format_partition(partition))
    return EXIT_OK


def _cmd_quotient(config: RunConfig, out) -> int:
    wg = formats.load_weighted_graph(config.input_path)
    partition = _resolve_partition(config, wg)
    if not (0 <= config.class_index < partition.k):
        raise ValueError(
            f"class index {config.class_index} out of range 0..{partition.k - 1}"
        )
    q = build_quotient(wg, partition.classes[config.class_index])
    if config.output_format == "structured":
        payload = {
            "vertices": q.graph.n,
            "edges": [list(e) for e in q.graph.edges],
            "vertex_weights": list(q.vertex_weights),
            "edge_weights": list(q.edge_weights),
            "vertex_map": list(q.vertex_map),
            "fibers": [list(f) for f in q.fibers],
        }
        _emit_structured(payload, out)
    else:
        out.write(formats.format_quotient(q, fibers=config.emit_breakdown))
    return EXIT_OK


def _cmd_benzenoid(config: RunConfig, out) -> int:
    spec = formats.load_cells(config.input_path)
    bg = build_benzenoid(spec)
    rep = mostar_benzenoid(bg, threads=config.threads)
    if config.output_format == "structured":
        payload = rep.to_dict()
        payload["cells"] = len(bg.cells)
        payload["vertices"] = bg.graph.n
        payload["edges"] = bg.graph.m
        payload["boundary_length"] = bg.boundary_length
        _emit_structured(payload, out)
    else:
        print(f"cells: {len(bg.cells)}", file=out)
        print(f"vertices: {bg.graph.n}", file=out)
        print(f"edges: {bg.graph.m}", file=out)
        print(f"boundary: {bg.boundary_length}", file=out)
        _render_report(rep, out, breakdown=False)
    return EXIT_OK


def _cmd_coronene(config: RunConfig, out) -> int:
    h = config.h
    bg = build_benzenoid(coronene(h))
    rep = mostar_benzenoid(bg)
    expected = coronene_closed_form(h)
    match = rep.total == expected
    if config.output_format == "structured":
        payload = {
            "h": h,
            "cells": len(bg.cells),
            "vertices": bg.graph.n,
            "edges": bg.graph.m,
            "total": rep.total,
            "closed_form": expected,
            "match": match,
            "per_class": rep.to_dict()["per_class"],
        }
        _emit_structured(payload, out)
    else:
        print(f"h: {h}", file=out)
        print(f"cells: {len(bg.cells)}", file=out)
        print(f"vertices: {bg.graph.n}", file=out)
        print(f"edges: {bg.graph.m}", file=out)
        _render_report(rep, out, breakdown=False)
        print(f"closed-form: {expected}", file=out)
        print("closed-form match" if match else "closed-form MISMATCH", file=out)
    return EXIT_OK if match else EXIT_MISMATCH


_DISPATCH = {
    "mostar": _cmd_mostar,
    "theta": _cmd_theta,
    "quotient": _cmd_quotient,
    "benzenoid": _cmd_benzenoid,
    "coronene": _cmd_coronene,
}


def run(argv: list[str] | None = None, out=None) -> int:
    """Parse arguments, dispatch, and map errors to exit codes."""

    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        config = _config_from_args(args)
        return _DISPATCH[config.command](config, out)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except NotCPartitionError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NOT_C_PARTITION
    except (DisconnectedError, DisconnectedCellsError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except (MostarError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
