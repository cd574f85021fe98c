"""Reference computation of eulerian magnitude homology straight from the definitions.

Slow by design: chain bases are every tuple of distinct vertices with the
requested length, and differentials delete each interior landmark and
re-measure.  Meant for small graphs only.
"""

from __future__ import annotations

from .boundary import RATIONAL, SparseBoundaryMatrix, rank
from .errors import DomainError, ResourceLimitError
from .fda import ChainBasis
from .graph import INFINITE, Graph, trail_length

DEFAULT_CAP = 10


def _check(g: Graph, k: int, ell: int, cap: int):
    if g.n > cap:
        raise ResourceLimitError(f"naive oracle is limited to n <= {cap} vertices (graph has {g.n})")
    if k < 0 or ell < 0:
        raise DomainError(f"gradings must be non-negative, got k={k}, ell={ell}")


def oracle_chain_basis(g: Graph, k: int, ell: int, cap: int = DEFAULT_CAP) -> ChainBasis:
    """All ``(k+1)``-tuples of pairwise distinct vertices of total length ``ell``."""
    _check(g, k, ell, cap)
    found = []
    rows = [g.distance_row(v) for v in range(g.n)]

    # backtracking over distinct-vertex prefixes; lengths only grow, so a
    # prefix longer than ell can never complete
    def grow(prefix: list[int], used: set[int], length):
        if len(prefix) == k + 1:
            if length == ell:
                found.append(tuple(prefix))
            return
        last = rows[prefix[-1]]
        for w in range(g.n):
            if w in used:
                continue
            d = last[w]
            if d == INFINITE or length + d > ell:
                continue
            prefix.append(w)
            used.add(w)
            grow(prefix, used, length + d)
            used.discard(w)
            prefix.pop()

    for v in range(g.n):
        grow([v], {v}, 0)
    return ChainBasis.from_trails(k, ell, found)


def oracle_differential(g: Graph, k: int, ell: int, cap: int = DEFAULT_CAP) -> SparseBoundaryMatrix:
    """Matrix of ``EMC_{k,ell} -> EMC_{k-1,ell}`` by delete-and-remeasure."""
    _check(g, k, ell, cap)
    domain = oracle_chain_basis(g, k, ell, cap)
    if k == 0:
        codomain = ChainBasis(-1, ell, (), {})
        return SparseBoundaryMatrix(0, len(domain), (), domain, codomain)
    codomain = oracle_chain_basis(g, k - 1, ell, cap)
    entries = []
    for c, t in enumerate(domain.trails):
        for i in range(1, k):
            face = t[:i] + t[i + 1:]
            if trail_length(g, face) == ell:
                entries.append((codomain.index[face], c, (-1) ** i))
    entries.sort(key=lambda e: (e[1], e[0]))
    return SparseBoundaryMatrix(len(codomain), len(domain), tuple(entries), domain, codomain)


def oracle_betti(g: Graph, k: int, ell: int, cap: int = DEFAULT_CAP) -> int:
    """Rank of ``EMH_{k,ell}`` over the rationals: ``dim ker d_k - rank d_{k+1}``."""
    out = oracle_differential(g, k, ell, cap)
    into = oracle_differential(g, k + 1, ell, cap)
    return out.cols - rank(out, RATIONAL) - rank(into, RATIONAL)


def oracle_table(g: Graph, ell_max: int, cap: int = DEFAULT_CAP) -> dict[tuple[int, int], int]:
    """``{(k, ell): rank EMH_{k,ell}}`` for ``0 <= k <= ell <= ell_max``."""
    table = {}
    for ell in range(ell_max + 1):
        diffs = [oracle_differential(g, k, ell, cap) for k in range(ell + 2)]
        ranks = [rank(d) for d in diffs]
        for k in range(ell + 1):
            table[(k, ell)] = diffs[k].cols - ranks[k] - ranks[k + 1]
    return table
