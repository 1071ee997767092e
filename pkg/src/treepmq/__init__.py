"""Online tree path-minimum (bottleneck edge) query oracles.

Build an oracle over an edge-weighted tree once, then answer "minimum weight
on the u..v path" queries online, each within a fixed budget of weight
comparisons: 2k for the step-k layered oracle, zero for the basic and
Cartesian-tree oracles.  Includes minimum-spanning-tree verification on top
of the path-maximum variant and a CSV benchmark harness.
"""
from ._accel import NUMBA_ENABLED, backend_name
from .ackermann import SATURATED, ackermann, alpha, alpha2, iter_lambda, lambda_row, thresholds
from .boruvka import (
    BalanceParams,
    BoruvkaTree,
    build_balanced_boruvka,
    build_boruvka,
    check_boruvka_invariants,
)
from .cartesian import CartesianOracle, build_cartesian, cartesian_path_min
from .generate import random_connected_graph, random_tree
from .lca import LcaOracle, build_lca
from .meter import ComparisonCounter, fold_min, metered_min
from .mstverify import VerificationReport, WeightedGraph, kruskal_mst, verify_mst
from .oracles import (
    PathMinOracle,
    QueryOutcome,
    brute_all_pairs,
    brute_query,
    build_basic,
    build_recursive,
)
from .staircase import Staircases, build_staircases, staircase_query
from .tree import (
    NONE_WEIGHT,
    TOP,
    NodeWeightedTree,
    RootedTree,
    TreeFormatError,
    WeightedTree,
    edge_to_node,
    node_to_edge,
    parse_tree,
    root_at,
    serialize_tree,
)

__version__ = "0.1.0"

__all__ = [
    "NUMBA_ENABLED",
    "backend_name",
    "SATURATED",
    "ackermann",
    "alpha",
    "alpha2",
    "iter_lambda",
    "lambda_row",
    "thresholds",
    "BalanceParams",
    "BoruvkaTree",
    "build_boruvka",
    "build_balanced_boruvka",
    "check_boruvka_invariants",
    "CartesianOracle",
    "build_cartesian",
    "cartesian_path_min",
    "random_tree",
    "random_connected_graph",
    "LcaOracle",
    "build_lca",
    "ComparisonCounter",
    "metered_min",
    "fold_min",
    "WeightedGraph",
    "VerificationReport",
    "kruskal_mst",
    "verify_mst",
    "PathMinOracle",
    "QueryOutcome",
    "brute_query",
    "brute_all_pairs",
    "build_basic",
    "build_recursive",
    "Staircases",
    "build_staircases",
    "staircase_query",
    "NONE_WEIGHT",
    "TOP",
    "WeightedTree",
    "NodeWeightedTree",
    "RootedTree",
    "TreeFormatError",
    "parse_tree",
    "serialize_tree",
    "node_to_edge",
    "edge_to_node",
    "root_at",
]
