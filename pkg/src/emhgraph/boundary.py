"""Boundary matrices, exact ranks and first-diagonal Betti numbers."""

from __future__ import annotations

import logging
import time
import warnings
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, ResourceLimitError, TorsionWarning
from .fda import AUTO, ChainBasis, ChainLadder, OpCounter, Trail, enumerate_diagonal
from .graph import Graph

log = logging.getLogger(__name__)

RATIONAL = "rational"
DEFAULT_PRIME = 2**31 - 1


@dataclass(frozen=True)
class SparseBoundaryMatrix:
    """Signed sparse matrix of a differential, rows = codomain, cols = domain.

    ``entries`` holds ``(row, col, sign)`` triples sorted column-major.  The
    generating bases ride along for lookups but take no part in equality.
    """

    rows: int
    cols: int
    entries: tuple[tuple[int, int, int], ...]
    domain: ChainBasis | None = field(default=None, compare=False, repr=False)
    codomain: ChainBasis | None = field(default=None, compare=False, repr=False)

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def columns(self) -> list[dict[int, int]]:
        cols: list[dict[int, int]] = [{} for _ in range(self.cols)]
        for r, c, s in self.entries:
            cols[c][r] = s
        return cols

    def column(self, c: int) -> dict[int, int]:
        return {r: s for r, cc, s in self.entries if cc == c}

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for r, c, s in self.entries:
            out[r][c] = s
        return out

    def apply(self, vector: Mapping[int, int]) -> dict[int, int]:
        """Image of a sparse column-index -> coefficient vector; zero rows dropped."""
        out: dict[int, int] = {}
        for r, c, s in self.entries:
            a = vector.get(c)
            if a:
                out[r] = out.get(r, 0) + s * a
        return {r: v for r, v in sorted(out.items()) if v}

    def is_zero(self) -> bool:
        return not self.entries

    def compose(self, right: "SparseBoundaryMatrix") -> dict[tuple[int, int], int]:
        """Nonzero entries of ``self @ right`` keyed by ``(row, col)``."""
        if right.rows != self.cols:
            raise DomainError(f"shape mismatch: {self.rows}x{self.cols} @ {right.rows}x{right.cols}")
        mine = self.columns()
        out: dict[tuple[int, int], int] = {}
        for mid, c, s in right.entries:
            for r, t in mine[mid].items():
                key = (r, c)
                out[key] = out.get(key, 0) + s * t
        return {key: v for key, v in out.items() if v}


def boundary_terms(g: Graph, trail: Sequence[int]) -> list[tuple[Trail, int]]:
    """Faces of a first-diagonal trail with their signs, via the chord test.

    For a simple path, deleting interior landmark ``i`` keeps the length
    exactly when its two neighbours on the path are not adjacent.
    """
    t = tuple(trail)
    out = []
    for i in range(1, len(t) - 1):
        if not g.has_edge(t[i - 1], t[i + 1]):
            out.append((t[:i] + t[i + 1:], -1 if i % 2 else 1))
    return out


def build_boundary(g: Graph, diag: ChainBasis, subdiag: ChainBasis,
                   max_nnz: int | None = None) -> SparseBoundaryMatrix:
    """Matrix of ``EMC_{k,k} -> EMC_{k-1,k}`` from the chord test."""
    k = diag.k
    if diag.ell != k or subdiag.k != k - 1 or subdiag.ell != k:
        raise DomainError(
            f"bases EMC_{{{diag.k},{diag.ell}}} -> EMC_{{{subdiag.k},{subdiag.ell}}} "
            "are not consecutive first-diagonal gradings")
    entries = []
    index = subdiag.index
    for c, t in enumerate(diag.trails):
        for face, sign in sorted(boundary_terms(g, t), key=lambda fs: index[fs[0]]):
            entries.append((index[face], c, sign))
        if max_nnz is not None and len(entries) > max_nnz:
            raise ResourceLimitError(
                f"boundary matrix for k={k} exceeds the nonzero cap of {max_nnz}")
    return SparseBoundaryMatrix(len(subdiag), len(diag), tuple(entries), diag, subdiag)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def parse_field(spec) -> str | int:
    """``"rational"``, ``"prime:P"`` or an int ``P`` -> normalized field tag."""
    if spec == RATIONAL or spec is None:
        return RATIONAL
    if isinstance(spec, str):
        if not spec.startswith("prime:"):
            raise DomainError(f"unknown field {spec!r}; use 'rational' or 'prime:P'")
        try:
            spec = int(spec.split(":", 1)[1])
        except ValueError:
            raise DomainError(f"bad prime in field spec {spec!r}") from None
    if not isinstance(spec, int) or not is_prime(spec):
        raise DomainError(f"{spec!r} is not prime")
    return spec


def field_tag(fld) -> str:
    return RATIONAL if fld == RATIONAL else f"prime:{fld}"


def _content(*vecs: Mapping[int, int]) -> int:
    c = 0
    for v in vecs:
        for x in v.values():
            c = gcd(c, x)
            if c == 1:
                return 1
    return c


def _combine(a: int, v: Mapping[int, int], b: int, w: Mapping[int, int], p: int | None) -> dict[int, int]:
    """``a*v - b*w`` with zeros dropped, optionally reduced mod ``p``."""
    out = {r: a * x for r, x in v.items()}
    for r, y in w.items():
        out[r] = out.get(r, 0) - b * y
    if p is None:
        return {r: x for r, x in out.items() if x}
    return {r: x % p for r, x in out.items() if x % p}


def _reduce(columns: list[dict[int, int]], order: Iterable[int], p: int | None, track: bool):
    """Column echelon reduction; returns ``(rank, kernel vectors)``.

    Over the integers each step is the fraction-free update
    ``v <- (b/g) v - (a/g) pivot`` followed by division by the content, so
    entries stay exact and small.  Modulo ``p`` the pivot is scaled by an
    inverse instead.
    """
    pivots: dict[int, tuple[dict[int, int], dict[int, int]]] = {}
    kernel = []
    for j in order:
        v = dict(columns[j])
        if p is not None:
            v = {r: x % p for r, x in v.items() if x % p}
        t = {j: 1} if track else {}
        while v:
            r = min(v)
            hit = pivots.get(r)
            if hit is None:
                pivots[r] = (v, t)
                break
            pv, pt = hit
            a, b = v[r], pv[r]
            if p is None:
                d = gcd(a, b)
                sa, sb = b // d, a // d
                v = _combine(sa, v, sb, pv, None)
                if track:
                    t = _combine(sa, t, sb, pt, None)
                c = _content(v, t)
                if c > 1:
                    v = {i: x // c for i, x in v.items()}
                    t = {i: x // c for i, x in t.items()}
            else:
                f = a * pow(b, -1, p) % p
                v = _combine(1, v, f, pv, p)
                if track:
                    t = _combine(1, t, f, pt, p)
        else:
            if track:
                kernel.append(t)
    return len(pivots), kernel


def rank(m: SparseBoundaryMatrix, field=RATIONAL) -> int:
    """Exact rank over the rationals, or modulo a prime ``field``."""
    fld = parse_field(field)
    cols = m.columns()
    # sparsest columns first keeps fill-in low
    order = sorted(range(m.cols), key=lambda j: (len(cols[j]), j))
    r, _ = _reduce(cols, order, None if fld == RATIONAL else fld, track=False)
    return r


def _normalize(vec: Mapping[int, int]) -> dict[int, int]:
    items = sorted((c, x) for c, x in vec.items() if x)
    g = 0
    for _, x in items:
        g = gcd(g, x)
    if items[0][1] < 0:
        g = -g
    return {c: x // g for c, x in items}


def kernel_basis(m: SparseBoundaryMatrix) -> list[dict[int, int]]:
    """Integer basis of the rational kernel.

    Each vector maps column index to coefficient, is primitive and has a
    positive first entry.  Vectors come out in order of their largest column.
    """
    cols = m.columns()
    _, kernel = _reduce(cols, range(m.cols), None, track=True)
    return [_normalize(v) for v in kernel]


@dataclass(frozen=True)
class BettiLevel:
    k: int
    dim_diag: int
    dim_subdiag: int
    rank: int
    betti: int


@dataclass
class BettiReport:
    """First-diagonal ranks ``beta_{k,k}`` for ``k = 0 .. last_k``."""

    n: int
    num_edges: int
    field: str
    k_max: int | str
    levels: list[BettiLevel]
    exhausted: bool
    counter: OpCounter
    max_degree: int
    timings: dict[str, float] = field(default_factory=dict)
    torsion_warnings: list[int] = field(default_factory=list)

    @property
    def betti(self) -> dict[int, int]:
        return {lv.k: lv.betti for lv in self.levels}

    def level(self, k: int) -> BettiLevel:
        for lv in self.levels:
            if lv.k == k:
                return lv
        raise KeyError(k)

    @property
    def last_k(self) -> int:
        return self.levels[-1].k


def betti_from_ladder(g: Graph, ladder: ChainLadder, field=RATIONAL, max_nnz: int | None = None,
                      cross_check: bool = False) -> BettiReport:
    fld = parse_field(field)
    # beta_{0,0} and beta_{1,1}: the differentials out of these gradings are
    # empty sums and nothing maps in, since EMC_{k+1,k} vanishes
    levels = [BettiLevel(0, g.n, 0, 0, g.n)]
    torsion = []
    t0 = time.perf_counter()
    for k, diag, subdiag in ladder:
        m = build_boundary(g, diag, subdiag, max_nnz=max_nnz)
        r = rank(m, fld)
        if cross_check:
            other = rank(m, DEFAULT_PRIME if fld == RATIONAL else RATIONAL)
            if other != r:
                torsion.append(k)
                warnings.warn(f"k={k}: rank {r} over {field_tag(fld)} but {other} over the other field",
                              TorsionWarning, stacklevel=2)
        levels.append(BettiLevel(k, len(diag), len(subdiag), r, len(diag) - r))
        log.debug("k=%d dim_diag=%d dim_subdiag=%d rank=%d", k, len(diag), len(subdiag), r)
    return BettiReport(
        n=g.n, num_edges=g.num_edges, field=field_tag(fld), k_max=ladder.k_max, levels=levels,
        exhausted=ladder.exhausted, counter=ladder.counter, max_degree=g.max_degree(),
        timings={"homology_s": time.perf_counter() - t0}, torsion_warnings=torsion)


def betti_first_diagonal(g: Graph, k_max=AUTO, field=RATIONAL, workers: int = 1,
                         max_nnz: int | None = None, cross_check: bool = False) -> BettiReport:
    """``beta_{k,k} = |EMC_{k,k}| - rank(d_{k,k})`` for every enumerated ``k``.

    No image term is subtracted: ``EMC_{k+1,k}`` is zero, so the homology in
    grading ``(k, k)`` is the whole kernel.
    """
    t0 = time.perf_counter()
    ladder = enumerate_diagonal(g, k_max, workers=workers)
    t1 = time.perf_counter()
    report = betti_from_ladder(g, ladder, field, max_nnz=max_nnz, cross_check=cross_check)
    report.timings["enumerate_s"] = t1 - t0
    return report
