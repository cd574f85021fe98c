"""Graph corpora shared by the test modules."""

from __future__ import annotations

import networkx as nx

from emhgraph.generators import erdos_renyi_graph
from emhgraph.graph import Graph

PAW_EDGES = [(0, 1), (1, 2), (0, 2), (2, 3)]

ER_COUNT = 200
ER_PROBS = (0.2, 0.35, 0.5, 0.65)


def paw() -> Graph:
    return Graph(4, PAW_EDGES)


def from_nx(h) -> Graph:
    h = nx.convert_node_labels_to_integers(h)
    return Graph(h.number_of_nodes(), h.edges())


def atlas_connected(max_n: int = 6) -> list[Graph]:
    """Connected graphs on 1..max_n vertices, one per isomorphism class."""
    out = []
    for h in nx.graph_atlas_g():
        if 0 < h.number_of_nodes() <= max_n and nx.is_connected(h):
            out.append(from_nx(h))
    return out


def er_params(i: int) -> tuple[int, float, int]:
    """(n, p, seed) of the i-th random corpus graph; n cycles through 2..8."""
    return 2 + i % 7, ER_PROBS[(i // 7) % len(ER_PROBS)], 1000 + i


def er_corpus(count: int = ER_COUNT) -> list[Graph]:
    return [erdos_renyi_graph(*er_params(i)) for i in range(count)]


def full_corpus() -> list[Graph]:
    return atlas_connected() + er_corpus()
