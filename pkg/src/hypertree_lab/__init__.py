"""Hypertree recognition and host-tree structure toolkit.

A hypergraph is a hypertree when some tree on its vertices turns every
hyperedge into an induced subtree. This package recognizes hypertrees,
builds and enumerates their host trees, computes the basic sets that govern
the host-tree structure, and specializes the machinery to clique trees of
chordal graphs and compatible trees of dually chordal graphs.
"""

from .core import (
    EquivalenceOp,
    Hypergraph,
    SimpleGraph,
    SpanningTree,
    apply_equivalence_op,
    dual,
    intersection_core,
    is_conformal,
    is_helly,
    is_host_tree,
    is_separating,
    line_graph,
    neighborhood_hypergraph,
    simplify,
    split_by_set,
    two_section,
)
from .errors import (
    CapExceededError,
    HypertreeLabError,
    NotChordalError,
    NotConnectedError,
    NotDuallyChordalError,
    NotHypertreeError,
    ParseError,
)
from .formats import parse_instance, serialize, to_dot
from .graphapps import (
    CliqueFamily,
    CliqueTree,
    CompatibleTree,
    Weighting,
    clique_tree,
    clique_tree_edge_feasible,
    compatible_edge_feasible,
    compatible_tree,
    is_basic_chordal,
    is_dually_chordal,
    maximal_cliques,
    maximal_cliques_chordal,
)
from .hosttree import (
    Basis,
    BasicSetRecord,
    SwapStep,
    basic_sets,
    completion_contains,
    count_host_trees,
    enumerate_completion,
    enumerate_host_trees,
    equivalent,
    feasible_edges,
    is_basic_hypertree,
    is_feasible_edge,
    swap_sequence,
)
from .kernels import BACKEND
from .recognition import (
    ChordalityCertificate,
    Method,
    RecognitionResult,
    ReductionTrace,
    RemoveContainedEdge,
    ShrinkPrivateVertex,
    gyo_reduce,
    host_tree,
    is_chordal,
    is_dual_hypertree,
    is_hypertree,
    max_weight_spanning_tree,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Basis",
    "BasicSetRecord",
    "CapExceededError",
    "ChordalityCertificate",
    "CliqueFamily",
    "CliqueTree",
    "CompatibleTree",
    "EquivalenceOp",
    "Hypergraph",
    "HypertreeLabError",
    "Method",
    "NotChordalError",
    "NotConnectedError",
    "NotDuallyChordalError",
    "NotHypertreeError",
    "ParseError",
    "RecognitionResult",
    "ReductionTrace",
    "RemoveContainedEdge",
    "ShrinkPrivateVertex",
    "SimpleGraph",
    "SpanningTree",
    "SwapStep",
    "Weighting",
    "apply_equivalence_op",
    "basic_sets",
    "clique_tree",
    "clique_tree_edge_feasible",
    "compatible_edge_feasible",
    "compatible_tree",
    "completion_contains",
    "count_host_trees",
    "dual",
    "enumerate_completion",
    "enumerate_host_trees",
    "equivalent",
    "feasible_edges",
    "gyo_reduce",
    "host_tree",
    "intersection_core",
    "is_basic_chordal",
    "is_basic_hypertree",
    "is_chordal",
    "is_conformal",
    "is_dual_hypertree",
    "is_dually_chordal",
    "is_feasible_edge",
    "is_helly",
    "is_host_tree",
    "is_hypertree",
    "is_separating",
    "line_graph",
    "max_weight_spanning_tree",
    "maximal_cliques",
    "maximal_cliques_chordal",
    "neighborhood_hypergraph",
    "parse_instance",
    "serialize",
    "simplify",
    "split_by_set",
    "swap_sequence",
    "to_dot",
    "two_section",
]
