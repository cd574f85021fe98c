"""First-diagonal chain enumeration.

``diag(k)`` holds the eulerian ``k``-trails of length ``k``: simple paths on
``k + 1`` vertices.  ``subdiag(k)`` holds the eulerian ``(k - 1)``-trails of
length ``k``: tuples of ``k`` distinct vertices where exactly one consecutive
pair sits at hop distance 2 and every other consecutive pair is an edge.

Both are grown level by level from every start vertex.  A partial trail only
excludes its own vertices, so sibling branches never hide vertices from each
other.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DomainError
from .graph import Graph

Trail = tuple[int, ...]

AUTO = "auto"


@dataclass(frozen=True)
class ChainBasis:
    """Sorted, duplicate-free generators of one chain group ``EMC_{k,ell}``."""

    k: int
    ell: int
    trails: tuple[Trail, ...]
    index: dict = field(compare=False, repr=False, default_factory=dict)

    @classmethod
    def from_trails(cls, k: int, ell: int, trails: Iterable[Sequence[int]]) -> "ChainBasis":
        ordered = sorted(set(tuple(t) for t in trails))
        for t in ordered:
            if len(t) != k + 1:
                raise DomainError(f"trail {t} has {len(t)} vertices, expected {k + 1}")
        return cls(k, ell, tuple(ordered), {t: i for i, t in enumerate(ordered)})

    @classmethod
    def _presorted(cls, k: int, ell: int, trails: list[Trail]) -> "ChainBasis":
        return cls(k, ell, tuple(trails), {t: i for i, t in enumerate(trails)})

    def __len__(self):
        return len(self.trails)

    def __iter__(self):
        return iter(self.trails)

    def __contains__(self, trail):
        return tuple(trail) in self.index

    def position(self, trail: Sequence[int]) -> int:
        try:
            return self.index[tuple(trail)]
        except KeyError:
            raise DomainError(f"trail {tuple(trail)} is not a generator of EMC_{{{self.k},{self.ell}}}") from None


@dataclass
class OpCounter:
    """Instrumentation: candidate vertices examined during enumeration.

    ``extension_ops`` counts neighbours examined while extending simple paths
    of at least one edge into ``diag(2) .. diag(last_k)``.  In auto mode the
    extra pass over ``diag(last_k)`` that finds the next level empty is kept
    apart in ``probe_ops``; an algorithm told the depth in advance never
    makes it.  ``gap_ops`` counts candidates examined while growing the
    subdiagonal tuples.
    """

    extension_ops: int = 0
    gap_ops: int = 0
    probe_ops: int = 0

    def __iadd__(self, other: "OpCounter"):
        self.extension_ops += other.extension_ops
        self.gap_ops += other.gap_ops
        self.probe_ops += other.probe_ops
        return self


@dataclass
class ChainLadder:
    """``diag(k)`` and ``subdiag(k)`` for ``k = 1 .. last_k``.

    ``last_k`` is the largest ``k`` with ``diag(k)`` nonempty, truncated at the
    requested ``k_max``.  ``exhausted`` is True when enumeration found an
    empty diagonal, i.e. ``diag(last_k + 1)`` is known to be empty.
    """

    n: int
    k_max: int | str
    diag_levels: list[ChainBasis]
    subdiag_levels: list[ChainBasis]
    exhausted: bool
    counter: OpCounter

    @property
    def last_k(self) -> int:
        return len(self.diag_levels)

    def diag(self, k: int) -> ChainBasis:
        if k == 0:
            return ChainBasis._presorted(0, 0, [(v,) for v in range(self.n)])
        if 1 <= k <= self.last_k:
            return self.diag_levels[k - 1]
        return ChainBasis._presorted(k, k, [])

    def subdiag(self, k: int) -> ChainBasis:
        if 1 <= k <= self.last_k:
            return self.subdiag_levels[k - 1]
        return ChainBasis._presorted(max(k - 1, 0), k, [])

    def __iter__(self):
        for k in range(1, self.last_k + 1):
            yield k, self.diag_levels[k - 1], self.subdiag_levels[k - 1]


def extend_paths(g: Graph, frontier: Iterable[Trail], counter: OpCounter | None = None) -> list[Trail]:
    """Append every neighbour of the last vertex that the trail has not visited.

    Lexicographically sorted input gives sorted output.
    """
    out = []
    examined = 0
    adj = g.adjacency
    for t in frontier:
        nbrs = adj[t[-1]]
        examined += len(nbrs)
        for w in nbrs:
            if w not in t:
                out.append(t + (w,))
    if counter is not None:
        counter.extension_ops += examined
    return out


def subdiagonal_from_path(g: Graph, p: Sequence[int]) -> list[Trail]:
    """Drop the penultimate vertex of ``p`` when that keeps the length.

    Returns ``[p[:-2] + p[-1:]]`` if ``p[-3]`` and ``p[-1]`` are at hop
    distance 2, else ``[]``.  This only produces tuples whose distance-2 step
    is the last one and whose midpoint is outside the tuple, so it is a
    proper subset of the subdiagonal in general; see
    :func:`incremental_subdiagonal`.
    """
    p = tuple(p)
    if len(p) < 3:
        return []
    if g.distance(p[-3], p[-1]) == 2:
        return [p[:-2] + p[-1:]]
    return []


def _gap_extend(g: Graph, frontier: Iterable[Trail], counter: OpCounter) -> list[Trail]:
    out = []
    examined = 0
    for t in frontier:
        far = g.second_neighbors(t[-1])
        examined += len(far)
        for w in far:
            if w not in t:
                out.append(t + (w,))
    counter.gap_ops += examined
    return out


def _adj_extend_gapped(g: Graph, frontier: Iterable[Trail], counter: OpCounter) -> list[Trail]:
    out = []
    examined = 0
    adj = g.adjacency
    for t in frontier:
        nbrs = adj[t[-1]]
        examined += len(nbrs)
        for w in nbrs:
            if w not in t:
                out.append(t + (w,))
    counter.gap_ops += examined
    return out


def _enumerate_from(g: Graph, v: int, k_max: int | None):
    """Diagonal and subdiagonal levels for trails starting at ``v``.

    Returns ``(paths, gapped, ext_ops, counter)`` where ``paths[k - 1]`` is
    ``diag(k)`` and ``gapped[k - 1]`` is ``subdiag(k)`` restricted to start
    ``v``, and ``ext_ops[k - 1]`` counts neighbours examined extending
    ``diag(k)``.  ``counter`` holds the gap operations only.  In auto mode
    (``k_max is None``) the path levels stop at the first empty one while the
    gapped levels keep going until empty; the caller trims them to the global
    diagonal depth.
    """
    counter = OpCounter()
    paths: list[list[Trail]] = []
    gapped: list[list[Trail]] = [[]]  # subdiag(1) = EMC_{0,1} is always 0
    p_prev = [(v,)]
    g_prev: list[Trail] = []
    ext_ops: list[int] = []
    # level j -> j + 1: p_prev = diag(j), g_prev = subdiag(j + 1)
    j = 0
    while True:
        if k_max is not None and j >= k_max:
            break
        if j == 0:
            p_next = [(v, w) for w in g.adjacency[v]]
        else:
            step = OpCounter()
            p_next = extend_paths(g, p_prev, step)
            ext_ops.append(step.extension_ops)
        # subdiag(j + 2): gapped tuples on j + 2 vertices
        want_gap = k_max is None or j + 2 <= k_max
        g_next = []
        if want_gap:
            g_next = _adj_extend_gapped(g, g_prev, counter) + _gap_extend(g, p_prev, counter)
            g_next.sort()
        if not p_next:
            # other starts may still reach deeper levels, so gapped tuples
            # from this start continue while any remain
            if not g_next:
                break
        else:
            paths.append(p_next)
        gapped.append(g_next)
        p_prev, g_prev = p_next, g_next
        j += 1
    return paths, gapped, ext_ops, counter


def _enumerate_chunk(args):
    g, starts, k_max = args
    return [_enumerate_from(g, v, k_max) for v in starts]


def enumerate_diagonal(g: Graph, k_max: int | str = AUTO, workers: int = 1) -> ChainLadder:
    """Enumerate ``diag(k)`` and ``subdiag(k)`` for ``k`` up to ``k_max``.

    With ``k_max="auto"`` enumeration runs until the first empty diagonal.
    Work is split over start vertices; the merged result is the same for any
    ``workers`` value.
    """
    if k_max == AUTO:
        cap = None
    elif isinstance(k_max, int) and not isinstance(k_max, bool) and k_max >= 1:
        cap = k_max
    else:
        raise DomainError(f"k_max must be a positive integer or 'auto', got {k_max!r}")
    if workers < 1:
        raise DomainError(f"workers must be >= 1, got {workers}")

    starts = list(range(g.n))
    if workers == 1 or g.n < 2:
        results = [_enumerate_from(g, v, cap) for v in starts]
    else:
        chunks = [starts[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_enumerate_chunk, [(g, c, cap) for c in chunks if c]))
        by_start = {}
        for chunk, part in zip([c for c in chunks if c], parts):
            for v, res in zip(chunk, part):
                by_start[v] = res
        results = [by_start[v] for v in starts]

    counter = OpCounter()
    last = 0
    for paths, _, _, c in results:
        counter += c
        last = max(last, len(paths))
    for _, _, ext_ops, _ in results:
        # ext_ops[j - 1] builds diag(j + 1); extending diag(last) is the probe
        built = max(last - 1, 0)
        counter.extension_ops += sum(ext_ops[:built])
        counter.probe_ops += sum(ext_ops[built:])
    if cap is not None:
        exhausted = last < cap
    else:
        exhausted = True

    diag_levels = []
    subdiag_levels = []
    for k in range(1, last + 1):
        d: list[Trail] = []
        s: list[Trail] = []
        for paths, gapped, _, _ in results:
            if k <= len(paths):
                d.extend(paths[k - 1])
            if k <= len(gapped):
                s.extend(gapped[k - 1])
        diag_levels.append(ChainBasis._presorted(k, k, d))
        subdiag_levels.append(ChainBasis._presorted(k - 1, k, s))
    return ChainLadder(g.n, k_max, diag_levels, subdiag_levels, exhausted, counter)


def incremental_subdiagonal(g: Graph, ladder: ChainLadder) -> list[ChainBasis]:
    """Subdiagonal bases built the incremental way, from paths and their extensions.

    ``subdiag(k)`` is taken as the tuples :func:`subdiagonal_from_path` emits
    for ``diag(k)``, plus every ``subdiag(k - 1)`` tuple extended by an
    unvisited neighbour.  This reaches every face of a diagonal trail, hence
    gives the same boundary ranks, but it misses tuples whose distance-2 step
    can only be bridged through a vertex already in the tuple (``(1, 0, 2)``
    on the path ``0-1-2``).  Those rows are always zero rows of the boundary.
    """
    levels = []
    prev: list[Trail] = []
    for k in range(1, ladder.last_k + 1):
        if k == 1:
            cur: list[Trail] = []
        else:
            cur = extend_paths(g, prev)
            for p in ladder.diag(k):
                cur.extend(subdiagonal_from_path(g, p))
        basis = ChainBasis.from_trails(k - 1, k, cur)
        levels.append(basis)
        prev = list(basis.trails)
    return levels
