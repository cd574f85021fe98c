import warnings
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from emhgraph.boundary import (DEFAULT_PRIME, SparseBoundaryMatrix, betti_first_diagonal, boundary_terms,
                               build_boundary, is_prime, kernel_basis, parse_field, rank)
from emhgraph.errors import DomainError, ResourceLimitError
from emhgraph.fda import ChainBasis, enumerate_diagonal
from emhgraph.generators import complete_graph, path_graph, star_graph
from emhgraph.graph import trail_length
from emhgraph.witness import two_trail_witness

from _corpus import paw
from test_graph import graphs


def dense_rank(rows, cols, entries):
    """Gaussian elimination over Fraction, independent of the sparse code."""
    a = [[Fraction(0)] * cols for _ in range(rows)]
    for (r, c), x in entries.items():
        a[r][c] = Fraction(x)
    rk = 0
    for c in range(cols):
        piv = next((r for r in range(rk, rows) if a[r][c] != 0), None)
        if piv is None:
            continue
        a[rk], a[piv] = a[piv], a[rk]
        for r in range(rows):
            if r != rk and a[r][c] != 0:
                f = a[r][c] / a[rk][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[rk])]
        rk += 1
    return rk


def matrix(rows, cols, entries):
    return SparseBoundaryMatrix(rows, cols, tuple(sorted((r, c, x) for (r, c), x in entries.items())),
                                domain=None, codomain=None)


@st.composite
def int_matrices(draw):
    rows, cols = draw(st.integers(0, 7)), draw(st.integers(0, 7))
    cells = [(r, c) for r in range(rows) for c in range(cols)]
    picked = draw(st.lists(st.sampled_from(cells), unique=True)) if cells else []
    entries = {cell: draw(st.integers(-3, 3).filter(bool)) for cell in picked}
    return rows, cols, entries


def paw_matrix():
    lad = enumerate_diagonal(paw(), 2)
    return build_boundary(paw(), lad.diag(2), lad.subdiag(2))


def test_paw_boundary_entries():
    m = paw_matrix()
    assert (m.rows, m.cols) == (4, 10)
    assert list(m.entries) == [(0, 2, -1), (1, 5, -1), (2, 8, -1), (3, 9, -1)]
    d = m.domain
    assert m.column(d.position((0, 2, 3))) == {m.codomain.position((0, 3)): -1}
    assert m.column(d.position((0, 1, 2))) == {}
    assert rank(m) == 4


def test_paw_kernel():
    m = paw_matrix()
    ker = kernel_basis(m)
    assert len(ker) == 6
    killed = {m.domain.trails[next(iter(v))] for v in ker}
    assert all(len(v) == 1 and set(v.values()) == {1} for v in ker)
    assert killed == set(m.domain.trails) - {(0, 2, 3), (1, 2, 3), (3, 2, 0), (3, 2, 1)}


def test_paw_betti():
    rep = betti_first_diagonal(paw())
    assert rep.betti == {0: 4, 1: 8, 2: 6, 3: 0}
    lv = rep.level(2)
    assert (lv.dim_diag, lv.dim_subdiag, lv.rank, lv.betti) == (10, 4, 4, 6)


def test_complete_graph_zero_boundary():
    for n in (3, 4, 5):
        g = complete_graph(n)
        for k, diag, sub in enumerate_diagonal(g):
            assert build_boundary(g, diag, sub).is_zero()
    assert betti_first_diagonal(complete_graph(4)).betti[2] == 24


def test_star3_and_p4():
    rep = betti_first_diagonal(star_graph(4))
    lv = rep.level(2)
    assert (lv.dim_diag, lv.dim_subdiag, lv.rank, lv.betti) == (6, 6, 6, 0)
    rep = betti_first_diagonal(path_graph(4))
    lv = rep.level(3)
    assert (lv.dim_diag, lv.rank, lv.betti) == (2, 2, 0)


def test_two_trail_kernel_contains_difference():
    w = two_trail_witness([0, 1, 2, 3, 4], [0, 1, "2'", 3, 4])
    g = w.graph
    lad = enumerate_diagonal(g, 4)
    m = build_boundary(g, lad.diag(4), lad.subdiag(4))
    d = lad.diag(4)
    vec = {d.position(g.ids([0, 1, 2, 3, 4])): 1, d.position(g.ids([0, 1, "2'", 3, 4])): -1}
    assert m.apply(vec) == {}
    for j in vec:
        assert m.apply({j: 1}) != {}


def test_rank_small_cases():
    assert rank(matrix(3, 4, {})) == 0
    assert rank(matrix(3, 3, {(0, 0): 1, (1, 1): -1, (2, 2): 1})) == 3
    assert rank(matrix(0, 0, {})) == 0


def test_grading_mismatch_rejected():
    lad = enumerate_diagonal(paw(), 3)
    with pytest.raises(DomainError):
        build_boundary(paw(), lad.diag(3), lad.subdiag(2))


def test_max_nnz_guard():
    g = star_graph(6)
    lad = enumerate_diagonal(g, 2)
    with pytest.raises(ResourceLimitError):
        build_boundary(g, lad.diag(2), lad.subdiag(2), max_nnz=5)
    assert build_boundary(g, lad.diag(2), lad.subdiag(2), max_nnz=100).nnz == 20


def test_field_parsing():
    assert parse_field("rational") == "rational"
    assert parse_field("prime:7") == 7
    assert is_prime(DEFAULT_PRIME)
    for bad in ("prime:8", "prime:1", "prime:x", "real"):
        with pytest.raises(DomainError):
            parse_field(bad)


def test_prime_rank_can_differ_and_warn():
    # rank 2 over Q, rank 1 mod 2
    m = matrix(2, 2, {(0, 0): 1, (0, 1): 1, (1, 0): 1, (1, 1): -1})
    assert rank(m) == 2
    assert rank(m, 2) == 1


@settings(max_examples=150, deadline=None)
@given(int_matrices())
def test_rank_matches_dense_elimination(mat):
    rows, cols, entries = mat
    m = matrix(rows, cols, entries)
    assert rank(m) == dense_rank(rows, cols, entries)


@settings(max_examples=150, deadline=None)
@given(int_matrices())
def test_kernel_basis_properties(mat):
    rows, cols, entries = mat
    m = matrix(rows, cols, entries)
    ker = kernel_basis(m)
    assert len(ker) == cols - rank(m)
    for v in ker:
        assert m.apply(v) == {}
        lead = min(v)
        assert v[lead] > 0
        from math import gcd
        c = 0
        for x in v.values():
            c = gcd(c, x)
        assert c == 1
    # linear independence
    k_entries = {(c, i): x for i, v in enumerate(ker) for c, x in v.items()}
    assert dense_rank(cols, len(ker), k_entries) == len(ker)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=7))
def test_chord_test_matches_remeasuring(g):
    for k, diag, sub in enumerate_diagonal(g):
        m = build_boundary(g, diag, sub)
        for j, t in enumerate(diag):
            expect = {}
            for i in range(1, k):
                face = t[:i] + t[i + 1:]
                if trail_length(g, face) == k:
                    assert not g.has_edge(t[i - 1], t[i + 1])
                    expect[sub.position(face)] = (-1) ** i
                else:
                    assert g.has_edge(t[i - 1], t[i + 1])
            assert m.column(j) == expect


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=7))
def test_report_invariants_and_field_agreement(g):
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        rep = betti_first_diagonal(g, cross_check=True)
        rep_p = betti_first_diagonal(g, field=f"prime:{DEFAULT_PRIME}", cross_check=True)
    assert rep.betti == rep_p.betti
    assert rep.betti[0] == g.n
    if rep.last_k >= 1:
        assert rep.betti[1] == 2 * g.num_edges
    for lv in rep.levels:
        assert 0 <= lv.rank <= min(lv.dim_diag, lv.dim_subdiag) or lv.k == 0
        assert lv.betti == lv.dim_diag - lv.rank >= 0


def test_boundary_terms_never_drop_endpoints():
    g = path_graph(5)
    for face, _ in boundary_terms(g, (0, 1, 2, 3, 4)):
        assert face[0] == 0 and face[-1] == 4
