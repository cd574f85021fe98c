"""Simple undirected graphs, hop distances and trail primitives.

Vertices are dense integer ids ``0..n-1``.  Arbitrary input labels are kept
alongside so results can be reported in the caller's vocabulary.
"""

from __future__ import annotations

import math
import threading
from collections import deque
from pathlib import Path
from typing import Hashable, Iterable, Sequence

from .errors import DomainError, GraphParseError

INFINITE = math.inf
"""Hop distance between vertices in different connected components."""


class Graph:
    """Immutable simple undirected graph.

    Hop-distance rows are computed lazily by breadth-first search, one row
    per source vertex, and cached.  Concurrent readers are safe: a row is
    inserted at most once under a lock.
    """

    __slots__ = ("n", "edges", "adjacency", "labels", "_nbr_sets", "_label_ids",
                 "_rows", "_second", "_lock")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (),
                 labels: Sequence[Hashable] | None = None):
        if n < 0:
            raise DomainError(f"vertex count must be non-negative, got {n}")
        canon = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u}, {v}) references a vertex outside 0..{n - 1}")
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            canon.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = frozenset(canon)
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in canon:
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.adjacency = tuple(tuple(sorted(s)) for s in nbrs)
        self._nbr_sets = tuple(frozenset(s) for s in nbrs)
        if labels is None:
            labels = range(n)
        self.labels = tuple(labels)
        if len(self.labels) != n:
            raise DomainError(f"expected {n} labels, got {len(self.labels)}")
        self._label_ids = {lab: i for i, lab in enumerate(self.labels)}
        if len(self._label_ids) != n:
            raise DomainError("vertex labels must be distinct")
        self._rows: dict[int, tuple] = {}
        self._second: dict[int, tuple[int, ...]] = {}
        self._lock = threading.Lock()

    # pickling drops the lock and caches so graphs can ship to worker processes
    def __getstate__(self):
        return (self.n, sorted(self.edges), self.labels)

    def __setstate__(self, state):
        n, edges, labels = state
        Graph.__init__(self, n, edges, labels)

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n, self.edges, self.labels) == (other.n, other.edges, other.labels)

    def __hash__(self):
        return hash((self.n, self.edges, self.labels))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def check_vertex(self, v) -> int:
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < self.n:
            raise DomainError(f"vertex id {v!r} out of range 0..{self.n - 1}")
        return v

    def id_of(self, label: Hashable) -> int:
        try:
            return self._label_ids[label]
        except KeyError:
            raise DomainError(f"unknown vertex label {label!r}") from None

    def ids(self, labels: Iterable[Hashable]) -> tuple[int, ...]:
        return tuple(self.id_of(lab) for lab in labels)

    def label_of(self, v: int) -> Hashable:
        return self.labels[v]

    def to_labels(self, vertices: Iterable[int]) -> tuple:
        return tuple(self.labels[v] for v in vertices)

    def distance_row(self, source: int) -> tuple:
        """Hop distances from ``source`` to every vertex (``INFINITE`` if unreachable)."""
        row = self._rows.get(source)
        if row is not None:
            return row
        self.check_vertex(source)
        dist = [INFINITE] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            du = dist[u] + 1
            for w in self.adjacency[u]:
                if dist[w] is INFINITE:
                    dist[w] = du
                    queue.append(w)
        row = tuple(dist)
        with self._lock:
            return self._rows.setdefault(source, row)

    def distance(self, u: int, v: int):
        self.check_vertex(v)
        return self.distance_row(self.check_vertex(u))[v]

    def second_neighbors(self, v: int) -> tuple[int, ...]:
        """Vertices at hop distance exactly 2 from ``v``, ascending."""
        out = self._second.get(v)
        if out is not None:
            return out
        near = self._nbr_sets[v]
        found = set()
        for m in self.adjacency[v]:
            found.update(self.adjacency[m])
        found.discard(v)
        found -= near
        out = tuple(sorted(found))
        with self._lock:
            return self._second.setdefault(v, out)

    def is_simple_path(self, vertices: Sequence[int]) -> bool:
        """True when all entries are distinct and consecutive entries are adjacent."""
        if len(set(vertices)) != len(vertices):
            return False
        return all(self.has_edge(a, b) for a, b in zip(vertices, vertices[1:]))

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = [v for v, d in enumerate(self.distance_row(s)) if d != INFINITE]
            for v in comp:
                seen[v] = True
            comps.append(comp)
        return comps

    def diameter(self):
        """Largest finite hop distance; ``INFINITE`` when disconnected, 0 when n <= 1."""
        best = 0
        for s in range(self.n):
            row = self.distance_row(s)
            if INFINITE in row:
                return INFINITE
            best = max(best, max(row))
        return best

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Isomorphic copy with vertex ``v`` renamed ``perm[v]``."""
        labels = [None] * self.n
        for v, p in enumerate(perm):
            labels[p] = self.labels[v]
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges], labels)


def hop_distance(g: Graph, u: int, v: int):
    """Shortest-path length between ``u`` and ``v``; ``INFINITE`` across components."""
    return g.distance(u, v)


def trail_length(g: Graph, vertices: Sequence[int]):
    """Sum of consecutive hop distances along ``vertices``.

    A single vertex has length 0.  The result is ``INFINITE`` as soon as one
    consecutive pair lies in different components.
    """
    if len(vertices) == 0:
        raise DomainError("a trail needs at least one vertex")
    for v in vertices:
        g.check_vertex(v)
    total = 0
    for a, b in zip(vertices, vertices[1:]):
        d = g.distance_row(a)[b]
        if d == INFINITE:
            return INFINITE
        total += d
    return total


def load_graph(edge_list: Iterable[tuple[Hashable, Hashable]],
               vertices: Iterable[Hashable] = ()) -> Graph:
    """Build a graph from labelled edges.

    Labels become ids in first-appearance order, ``vertices`` first (which
    also admits isolated vertices), then edge endpoints.  Duplicate edges in
    either orientation collapse; a self-loop is rejected.
    """
    ids: dict[Hashable, int] = {}

    def intern(label):
        i = ids.get(label)
        if i is None:
            i = ids[label] = len(ids)
        return i

    for lab in vertices:
        intern(lab)
    pairs = []
    for u, v in edge_list:
        if u == v:
            raise DomainError(f"self-loop at vertex {u!r}")
        pairs.append((intern(u), intern(v)))
    return Graph(len(ids), pairs, labels=list(ids))


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text.

    One edge per line as two whitespace-separated tokens.  A line holding a
    single token declares an isolated vertex.  ``#`` starts a comment line and
    blank lines are ignored.  Ids follow first appearance of each token.
    """
    order: dict[str, None] = {}
    edges = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if len(tokens) > 2:
            raise GraphParseError(f"expected two tokens, got {len(tokens)}", lineno, line)
        if len(tokens) == 2:
            if tokens[0] == tokens[1]:
                raise GraphParseError("self-loop", lineno, line)
            edges.append((tokens[0], tokens[1]))
        for tok in tokens:
            order.setdefault(tok, None)
    return load_graph(edges, vertices=list(order))


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text(encoding="utf-8"))


def format_edge_list(g: Graph) -> str:
    """Serialize ``g`` so that :func:`parse_edge_list` rebuilds the same ids.

    Vertex ``v`` is written through its edges to smaller ids, which places its
    first appearance right after vertex ``v - 1``; a vertex without smaller
    neighbours gets a one-token declaration line instead.
    """
    tokens = [str(lab) for lab in g.labels]
    for tok in tokens:
        if not tok or tok.startswith("#") or any(c.isspace() for c in tok):
            raise DomainError(f"label {tok!r} cannot be written as an edge-list token")
    out = []
    for v in range(g.n):
        lower = [u for u in g.adjacency[v] if u < v]
        if not lower:
            out.append(tokens[v])
        for u in lower:
            out.append(f"{tokens[u]} {tokens[v]}")
    return "\n".join(out) + ("\n" if out else "")


def write_edge_list(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_edge_list(g), encoding="utf-8")
