"""Built-in graph families.

Specs are strings such as ``"star 5"``, ``"complete-bipartite 2 3"`` or
``"er 8 0.4 7"`` (the trailing seed may instead be passed separately).
Colons work as separators too: ``"er:8:0.4"``.
"""

from __future__ import annotations

import networkx as nx

from .errors import DomainError
from .graph import Graph
from .witness import grid_family_graph

FAMILIES = ("path", "cycle", "star", "complete", "complete-bipartite", "friendship", "er", "grid-family")
RANDOM_FAMILIES = ("er",)


class SpecError(DomainError):
    """Malformed generator spec."""


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise SpecError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """Centre 0 joined to leaves ``1 .. n-1``."""
    return Graph(n, [(0, i) for i in range(1, n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def friendship_graph(m: int) -> Graph:
    """``m`` triangles sharing the centre 0."""
    edges = []
    for t in range(m):
        u, v = 2 * t + 1, 2 * t + 2
        edges += [(0, u), (0, v), (u, v)]
    return Graph(2 * m + 1, edges)


def erdos_renyi_graph(n: int, p: float, seed: int) -> Graph:
    h = nx.gnp_random_graph(n, p, seed=seed)
    return Graph(n, h.edges())


def _int(tok, name):
    try:
        v = int(tok)
    except ValueError:
        raise SpecError(f"{name} must be an integer, got {tok!r}") from None
    if v < 1:
        raise SpecError(f"{name} must be >= 1, got {v}")
    return v


def parse_spec(spec: str) -> tuple[str, list[str]]:
    tokens = spec.replace(":", " ").split()
    if not tokens:
        raise SpecError("empty generator spec")
    if tokens[0] not in FAMILIES:
        raise SpecError(f"unknown family {tokens[0]!r}; choose from {', '.join(FAMILIES)}")
    return tokens[0], tokens[1:]


def generate(spec: str, seed: int | None = None) -> Graph:
    """Graph for a generator spec; random families need a seed."""
    family, args = parse_spec(spec)
    arity = {"complete-bipartite": 2, "er": 2}.get(family, 1)
    if family == "er" and len(args) == 3:
        try:
            spec_seed = int(args[2].removeprefix("seed="))
        except ValueError:
            raise SpecError(f"seed must be an integer, got {args[2]!r}") from None
        if seed is not None and spec_seed != seed:
            raise SpecError("seed given twice with different values")
        seed = spec_seed
        args = args[:2]
    if len(args) != arity:
        raise SpecError(f"{family} takes {arity} argument(s), got {len(args)}")
    if family == "path":
        return path_graph(_int(args[0], "n"))
    if family == "cycle":
        return cycle_graph(_int(args[0], "n"))
    if family == "star":
        return star_graph(_int(args[0], "n"))
    if family == "complete":
        return complete_graph(_int(args[0], "n"))
    if family == "complete-bipartite":
        return complete_bipartite_graph(_int(args[0], "a"), _int(args[1], "b"))
    if family == "friendship":
        return friendship_graph(_int(args[0], "m"))
    if family == "grid-family":
        return grid_family_graph(_int(args[0], "k")).graph
    # er
    n = _int(args[0], "n")
    try:
        p = float(args[1])
    except ValueError:
        raise SpecError(f"p must be a number, got {args[1]!r}") from None
    if not 0 <= p <= 1:
        raise SpecError(f"p must lie in [0, 1], got {p}")
    if seed is None:
        raise SpecError("random generator 'er' requires a seed")
    return erdos_renyi_graph(n, p, seed)


def is_random(spec: str) -> bool:
    return parse_spec(spec)[0] in RANDOM_FAMILIES

