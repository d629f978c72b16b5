"""Fully dynamic connectivity and 2-edge connectivity.

Two paired structures per index: a spanning forest with parent
pointers and subtree sizes (depth kept low by placement heuristics),
and a disjoint-set forest with intrusive children lists so membership
can change one vertex at a time.  Queries are near-constant-time set
lookups; updates are local tree surgery.
"""

from .connectivity import ConnectivityIndex
from .disjoint_set import DisjointSetForest
from .errors import (
    AlreadyRoot,
    DuplicateEdge,
    DynConnError,
    EdgeAbsent,
    HasReplacements,
    IsRoot,
    KTooLarge,
    MissingTimestamps,
    NotRoot,
    OutOfRange,
    ParseError,
    RepUnderflow,
    SelfLoop,
)
from .graph import DynamicGraph
from .spanning_forest import DeleteKind, DeletionOutcome, InsertKind, SpanningForest
from .two_edge import SizedDisjointSet, TwoEdgeForest, TwoEdgeIndex
from .workload import (
    EdgeStream,
    EventKind,
    FuzzOutcome,
    MetricsReport,
    WorkloadEvent,
    build_index,
    load_edge_file,
    parse_edge_stream,
    random_edge_stream,
    run_connectivity_fuzz,
    run_random_cycle,
    run_sliding_window,
    run_two_ec_fuzz,
)

__version__ = "0.1.0"

__all__ = [
    "ConnectivityIndex",
    "TwoEdgeIndex",
    "DynamicGraph",
    "SpanningForest",
    "TwoEdgeForest",
    "DisjointSetForest",
    "SizedDisjointSet",
    "InsertKind",
    "DeleteKind",
    "DeletionOutcome",
    "EdgeStream",
    "EventKind",
    "WorkloadEvent",
    "MetricsReport",
    "FuzzOutcome",
    "parse_edge_stream",
    "load_edge_file",
    "random_edge_stream",
    "build_index",
    "run_random_cycle",
    "run_sliding_window",
    "run_connectivity_fuzz",
    "run_two_ec_fuzz",
    "DynConnError",
    "OutOfRange",
    "SelfLoop",
    "DuplicateEdge",
    "EdgeAbsent",
    "AlreadyRoot",
    "IsRoot",
    "NotRoot",
    "HasReplacements",
    "RepUnderflow",
    "KTooLarge",
    "MissingTimestamps",
    "ParseError",
]
