"""First-diagonal eulerian magnitude homology of finite simple graphs."""

from .boundary import (BettiReport, SparseBoundaryMatrix, betti_first_diagonal, build_boundary,
                       kernel_basis, rank)
from .fda import AUTO, ChainBasis, ChainLadder, enumerate_diagonal, extend_paths, subdiagonal_from_path
from .graph import INFINITE, Graph, hop_distance, load_graph, parse_edge_list, read_edge_list, trail_length
from .oracle import oracle_betti, oracle_chain_basis, oracle_differential
from .witness import (Chain, WitnessGraph, cycle_support, grid_family_graph, single_trail_support,
                      two_trail_witness)

__version__ = "0.1.0"

__all__ = [
    "AUTO", "INFINITE", "BettiReport", "Chain", "ChainBasis", "ChainLadder", "Graph",
    "SparseBoundaryMatrix", "WitnessGraph", "betti_first_diagonal", "build_boundary", "cycle_support",
    "enumerate_diagonal", "extend_paths", "grid_family_graph", "hop_distance", "kernel_basis",
    "load_graph", "oracle_betti", "oracle_chain_basis", "oracle_differential", "parse_edge_list",
    "rank", "read_edge_list", "single_trail_support", "subdiagonal_from_path", "trail_length",
    "two_trail_witness",
]
