"""Subgraphs supporting first-diagonal homology cycles.

Constructs the support graph of a single trail, the graph carried by a
two-trail cycle, the grid-like maximal member, and the induced support of an
arbitrary chain after checking its boundary vanishes.  Only the direction
"cycle gives a support graph" is covered; deciding whether an arbitrary
graph supports some cycle is not attempted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from .boundary import build_boundary, boundary_terms
from .errors import DomainError, GraphParseError, PreconditionError
from .fda import ChainBasis, Trail
from .graph import Graph, load_graph

PATH = "path"
CHORD = "chord"
FORBIDDEN = "forbidden"
OTHER = "other"
ROLES = (PATH, CHORD, FORBIDDEN, OTHER)


def _pair(u, v) -> frozenset:
    return frozenset((u, v))


@dataclass
class WitnessGraph:
    """A graph whose edges carry roles, plus explicitly absent pairs.

    ``roles`` maps each edge, as a pair of vertex ids, to ``path`` (on a
    trail), ``chord`` (an edge forced so a boundary term vanishes) or
    ``other`` (present but irrelevant).  ``forbidden`` lists non-adjacent
    pairs whose absence keeps a boundary term alive.
    """

    graph: Graph
    roles: dict[tuple[int, int], str]
    forbidden: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        for (u, v), role in self.roles.items():
            if not self.graph.has_edge(u, v):
                raise DomainError(f"role given for non-edge {self.graph.to_labels((u, v))}")
            if role not in (PATH, CHORD, OTHER):
                raise DomainError(f"unknown edge role {role!r}")
        for u, v in self.forbidden:
            if self.graph.has_edge(u, v):
                raise DomainError(f"forbidden pair {self.graph.to_labels((u, v))} is an edge")

    def labelled(self, role: str) -> set[frozenset]:
        """Pairs with ``role`` as frozensets of labels."""
        lab = self.graph.labels
        if role == FORBIDDEN:
            return {frozenset((lab[u], lab[v])) for u, v in self.forbidden}
        return {frozenset((lab[u], lab[v])) for (u, v), r in self.roles.items() if r == role}

    def edge_set(self) -> set[frozenset]:
        lab = self.graph.labels
        return {frozenset((lab[u], lab[v])) for u, v in self.graph.edges}

    def signature(self):
        return (frozenset(self.graph.labels),
                frozenset((pair, role) for role in ROLES for pair in self.labelled(role)))

    def __eq__(self, other):
        if not isinstance(other, WitnessGraph):
            return NotImplemented
        return self.signature() == other.signature()

    def to_text(self) -> str:
        """Annotated edge list: one ``u v role`` line per pair."""
        lab = self.graph.labels
        lines = []
        for u, v in sorted(self.graph.edges):
            lines.append(f"{lab[u]} {lab[v]} {self.roles.get((u, v), OTHER)}")
        for u, v in sorted(self.forbidden):
            lines.append(f"{lab[u]} {lab[v]} {FORBIDDEN}")
        return "\n".join(lines) + ("\n" if lines else "")


def parse_witness(text: str) -> WitnessGraph:
    """Inverse of :meth:`WitnessGraph.to_text` (up to vertex ids)."""
    edges, roles, forbidden, order = [], [], [], {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        if len(parts) != 3 or parts[2] not in ROLES:
            raise GraphParseError("expected 'u v role' with role in " + "/".join(ROLES), lineno, line)
        u, v, role = parts
        if u == v:
            raise GraphParseError("self-loop", lineno, line)
        order.setdefault(u, None)
        order.setdefault(v, None)
        if role == FORBIDDEN:
            forbidden.append((u, v))
        else:
            edges.append((u, v))
            roles.append(role)
    g = load_graph(edges, vertices=list(order))
    role_map = {}
    for (u, v), role in zip(edges, roles):
        a, b = g.id_of(u), g.id_of(v)
        role_map[(min(a, b), max(a, b))] = role
    fb = set()
    for u, v in forbidden:
        a, b = g.id_of(u), g.id_of(v)
        fb.add((min(a, b), max(a, b)))
    return WitnessGraph(g, role_map, frozenset(fb))


def _build(vertices: Sequence[Hashable], role_of: dict[frozenset, str],
           forbidden: Iterable[frozenset]) -> WitnessGraph:
    """WitnessGraph from label-level pairs; ``vertices`` fixes the id order."""
    g = load_graph([tuple(p) for p in role_of], vertices=vertices)
    roles = {}
    for p, role in role_of.items():
        a, b = sorted(g.ids(p))
        roles[(a, b)] = role
    fb = frozenset(tuple(sorted(g.ids(p))) for p in forbidden)
    return WitnessGraph(g, roles, fb)


def _path_pairs(trail: Sequence) -> list[frozenset]:
    return [_pair(a, b) for a, b in zip(trail, trail[1:])]


def _chord_pairs(trail: Sequence) -> list[frozenset]:
    return [_pair(trail[i - 1], trail[i + 1]) for i in range(1, len(trail) - 1)]


def single_trail_support(g: Graph, trail: Sequence[int]) -> WitnessGraph:
    """Support graph of a trail whose boundary vanishes: its path edges and every chord."""
    t = tuple(trail)
    for v in t:
        g.check_vertex(v)
    if not g.is_simple_path(t):
        raise PreconditionError(f"trail {g.to_labels(t)} is not a simple path of adjacent vertices")
    for i in range(1, len(t) - 1):
        if not g.has_edge(t[i - 1], t[i + 1]):
            a, b = g.to_labels((t[i - 1], t[i + 1]))
            raise PreconditionError(
                f"boundary of {g.to_labels(t)} is nonzero: chord {{{a}, {b}}} at position {i} is missing")
    labels = g.to_labels(t)
    roles = {p: PATH for p in _path_pairs(labels)}
    for p in _chord_pairs(labels):
        roles.setdefault(p, CHORD)
    return _build(labels, roles, ())


def two_trail_witness(x1: Sequence[Hashable], x2: Sequence[Hashable], k: int | None = None) -> WitnessGraph:
    """Graph on which ``x1 - x2`` is a cycle while neither trail is.

    The trails must agree everywhere except one interior position ``r``.
    Starting from the single-trail support of ``x1``, the replacement vertex
    is joined to the landmarks at positions ``r-2 .. r+2`` (other than ``r``,
    clipped to the trail), and the chord skipping position ``r`` is removed.
    """
    x1, x2 = tuple(x1), tuple(x2)
    if len(x1) != len(x2):
        raise DomainError("trails have different numbers of landmarks")
    if k is None:
        k = len(x1) - 1
    if len(x1) != k + 1:
        raise DomainError(f"trails have {len(x1)} landmarks, expected {k + 1}")
    if k < 2:
        raise DomainError("two-trail cycles need k >= 2")
    for x in (x1, x2):
        if len(set(x)) != len(x):
            raise DomainError(f"trail {x} repeats a landmark")
    diff = [i for i in range(k + 1) if x1[i] != x2[i]]
    if not diff:
        raise DomainError("trails are identical")
    if len(diff) > 1:
        raise DomainError(f"trails differ in {len(diff)} positions {diff}; their difference has nonzero boundary")
    r = diff[0]
    if not 1 <= r <= k - 1:
        raise DomainError("trails must share both endpoints")
    y = x2[r]
    if y in x1:
        raise DomainError(f"replacement landmark {y!r} already occurs in {x1}")

    roles = {p: PATH for p in _path_pairs(x1)}
    roles[_pair(x1[r - 1], y)] = PATH
    roles[_pair(y, x1[r + 1])] = PATH
    for p in _chord_pairs(x1):
        roles.setdefault(p, CHORD)
    for a in (r - 2, r + 2):
        if 0 <= a <= k:
            roles.setdefault(_pair(x1[a], y), CHORD)
    dropped = _pair(x1[r - 1], x1[r + 1])
    del roles[dropped]
    return _build(list(x1) + [y], roles, [dropped])


def grid_labels(k: int) -> tuple[list, list]:
    """Labels ``0..k`` for the main trail and ``"1'" .. "(k-1)'"`` for the alternates."""
    return list(range(k + 1)), [f"{r}'" for r in range(1, k)]


def grid_family_graph(k: int) -> WitnessGraph:
    """Maximal support graph: every interior landmark doubled, every chord removed."""
    if not isinstance(k, int) or k < 3:
        raise DomainError(f"grid family needs k >= 3, got {k!r}")
    main, alt = grid_labels(k)
    prime = dict(zip(range(1, k), alt))
    roles = {p: PATH for p in _path_pairs(main)}
    for r in range(1, k):
        roles[_pair(main[r - 1], prime[r])] = PATH
        roles[_pair(prime[r], main[r + 1])] = PATH
    for r in range(1, k - 1):
        roles[_pair(prime[r], prime[r + 1])] = PATH
    forbidden = [_pair(main[r - 1], main[r + 1]) for r in range(1, k)]
    return _build(main + alt, roles, forbidden)


@dataclass(frozen=True)
class Chain:
    """Integer combination of trails from one first-diagonal basis."""

    terms: tuple[tuple[int, Trail], ...]

    def __post_init__(self):
        seen = set()
        for coef, t in self.terms:
            if coef == 0:
                raise DomainError(f"zero coefficient on {t}")
            if t in seen:
                raise DomainError(f"trail {t} appears twice")
            seen.add(t)
        if len({len(t) for _, t in self.terms}) > 1:
            raise DomainError("trails in a chain must have the same number of landmarks")

    @classmethod
    def of(cls, terms: Iterable[tuple[int, Sequence[int]]]) -> "Chain":
        return cls(tuple((int(c), tuple(t)) for c, t in terms))

    @classmethod
    def from_labels(cls, g: Graph, terms: Iterable[tuple[int, Sequence[Hashable]]]) -> "Chain":
        return cls.of((c, g.ids(t)) for c, t in terms)

    @classmethod
    def from_vector(cls, basis: ChainBasis, vector: dict[int, int]) -> "Chain":
        return cls.of((c, basis.trails[j]) for j, c in sorted(vector.items()) if c)

    @property
    def k(self) -> int:
        return len(self.terms[0][1]) - 1 if self.terms else 0


def grid_family_cycle(w: WitnessGraph, k: int) -> Chain:
    """Signed sum of all alternating-route trails of :func:`grid_family_graph`.

    Trail coefficients are ``(-1)**(number of primed landmarks)``.
    """
    from itertools import product

    main, alt = grid_labels(k)
    terms = []
    for choice in product((0, 1), repeat=k - 1):
        labels = [main[0]] + [alt[r - 1] if c else main[r] for r, c in zip(range(1, k), choice)] + [main[k]]
        terms.append(((-1) ** sum(choice), w.graph.ids(labels)))
    return Chain.of(sorted(terms, key=lambda ct: ct[1]))


@dataclass
class CycleSupport:
    """Result of :func:`cycle_support`.

    ``boundary`` maps surviving faces, as label tuples, to coefficients and
    is empty exactly when the chain is a cycle.
    """

    witness: WitnessGraph
    boundary: dict[Trail, int]

    @property
    def is_cycle(self) -> bool:
        return not self.boundary

    def diagnostic(self) -> str:
        if self.is_cycle:
            return "boundary vanishes"
        face, coef = next(iter(self.boundary.items()))
        return f"not a cycle: face ({', '.join(map(str, face))}) survives with coefficient {coef}"


def cycle_support(g: Graph, chain: Chain) -> CycleSupport:
    """Check ``d(chain) == 0`` and return the subgraph induced by its landmarks.

    Path edges of the trails are tagged ``path``; present edges skipping one
    landmark are ``chord``; absent ones are ``forbidden``; any other induced
    edge is ``other``.
    """
    if not chain.terms:
        raise DomainError("empty chain")
    k = chain.k
    for _, t in chain.terms:
        for v in t:
            g.check_vertex(v)
        if not g.is_simple_path(t):
            raise DomainError(f"trail {g.to_labels(t)} is not in EMC_{{{k},{k}}}")
    domain = ChainBasis.from_trails(k, k, [t for _, t in chain.terms])
    faces = ChainBasis.from_trails(k - 1, k, [f for _, t in chain.terms for f, _ in boundary_terms(g, t)])
    m = build_boundary(g, domain, faces)
    image = m.apply({domain.position(t): c for c, t in chain.terms})
    boundary = {g.to_labels(faces.trails[r]): c for r, c in image.items()}

    vs = {v for _, t in chain.terms for v in t}
    path = {tuple(sorted(p)) for _, t in chain.terms for p in zip(t, t[1:])}
    skip = {tuple(sorted((t[i - 1], t[i + 1]))) for _, t in chain.terms for i in range(1, len(t) - 1)}
    lab = g.labels
    roles = {}
    for u, v in g.edges:
        if u in vs and v in vs:
            role = PATH if (u, v) in path else CHORD if (u, v) in skip else OTHER
            roles[_pair(lab[u], lab[v])] = role
    forbidden = [_pair(lab[u], lab[v]) for u, v in skip if not g.has_edge(u, v)]
    w = _build(g.to_labels(sorted(vs)), roles, forbidden)
    return CycleSupport(w, boundary)
