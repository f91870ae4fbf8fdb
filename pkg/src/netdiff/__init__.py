"""netdiff: weighted co-mention networks, their metrics, and their diffs.

Build weighted undirected networks from how often entity profiles mention
each other, compute per-node centralities and network density over
inverse-weight distances, compare two networks (degree/strength cosines,
edge Jaccard), detect communities with a deterministic Louvain pass, ablate
nodes, and emit DOT diagrams and report tables.
"""

from .cluster import AttributeTable, Partition, cluster_composition, louvain, modularity
from .compare import ComparisonReport, align_nodes, compare, eej, ndc, nsc
from .errors import (
    AliasCollision,
    CannotEmptyNetwork,
    DegenerateNetwork,
    DuplicatePair,
    EmptyInput,
    EmptyNetwork,
    EmptyUnion,
    FormatError,
    IncompletePartition,
    InvalidLabel,
    MissingProfile,
    NetdiffError,
    NonPositiveWeight,
    SelfLoop,
    UnknownAttribute,
    UnknownLabel,
)
from .graph import WeightedNetwork, edge_set, from_edge_list, remove_node
from .ingest import count_mentions, default_aliases, load_corpus, symmetrize
from .metrics import (
    ClosenessResult,
    NodeMetricsRow,
    PathSolution,
    betweenness_all,
    closeness,
    degree,
    density,
    metrics_all,
    shortest_paths,
    strength,
)
from .render import RenderOptions, metrics_table, metrics_table_multi, to_dot

__version__ = "0.1.0"

__all__ = [
    "AliasCollision",
    "AttributeTable",
    "CannotEmptyNetwork",
    "ClosenessResult",
    "ComparisonReport",
    "DegenerateNetwork",
    "DuplicatePair",
    "EmptyInput",
    "EmptyNetwork",
    "EmptyUnion",
    "FormatError",
    "IncompletePartition",
    "InvalidLabel",
    "MissingProfile",
    "NetdiffError",
    "NodeMetricsRow",
    "NonPositiveWeight",
    "Partition",
    "PathSolution",
    "RenderOptions",
    "SelfLoop",
    "UnknownAttribute",
    "UnknownLabel",
    "WeightedNetwork",
    "align_nodes",
    "betweenness_all",
    "closeness",
    "cluster_composition",
    "compare",
    "count_mentions",
    "default_aliases",
    "degree",
    "density",
    "edge_set",
    "eej",
    "from_edge_list",
    "load_corpus",
    "louvain",
    "metrics_all",
    "metrics_table",
    "metrics_table_multi",
    "modularity",
    "ndc",
    "nsc",
    "remove_node",
    "shortest_paths",
    "strength",
    "symmetrize",
    "to_dot",
]
