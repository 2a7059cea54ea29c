"""Mostar index of connected graphs.

Computes the index directly from its definition, by decomposition over
weighted quotient graphs of an edge partition coarser than the
closure classes of the four-point edge relation, and through a
linear-time pipeline for benzenoid systems described by hexagonal cells.
"""

from .benzenoid import (
    BenzenoidGraph,
    BenzenoidSpec,
    ElementaryCut,
    build_benzenoid,
    coronene,
    coronene_closed_form,
    direction_partition,
    elementary_cuts,
    mostar_benzenoid,
    quotient_trees,
)
from .engine import (
    ClassContribution,
    MostarReport,
    QuotientGraph,
    build_quotient,
    mostar_by_cut,
    mostar_direct,
    mostar_tree_linear,
)
from .errors import (
    DisconnectedCellsError,
    DisconnectedError,
    DuplicateEdgeError,
    EmptyCellSetError,
    IndexOutOfRangeError,
    MalformedPartitionError,
    MostarError,
    NotATreeError,
    NotCPartitionError,
    ParseError,
    SelfLoopError,
)
from .graph import (
    EdgeSplit,
    Graph,
    WeightedGraph,
    all_pairs_distances,
    bfs_distances,
    build_graph,
    components_after_removal,
    edge_split,
    unit_weights,
)
from .theta import (
    EdgePartition,
    edge_partition,
    is_c_partition,
    theta_related,
    theta_star_partition,
    trivial_partition,
)

__version__ = "0.1.0"

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
    "EdgePartition",
    "edge_partition",
    "trivial_partition",
    "theta_related",
    "theta_star_partition",
    "is_c_partition",
    "QuotientGraph",
    "ClassContribution",
    "MostarReport",
    "mostar_direct",
    "build_quotient",
    "mostar_by_cut",
    "mostar_tree_linear",
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
    "MostarError",
    "SelfLoopError",
    "DuplicateEdgeError",
    "IndexOutOfRangeError",
    "DisconnectedError",
    "MalformedPartitionError",
    "NotCPartitionError",
    "NotATreeError",
    "EmptyCellSetError",
    "DisconnectedCellsError",
    "ParseError",
]
