import json
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from emhgraph.boundary import build_boundary
from emhgraph.errors import ResourceLimitError
from emhgraph.fda import enumerate_diagonal
from emhgraph.generators import complete_graph, cycle_graph
from emhgraph.graph import Graph
from emhgraph.oracle import oracle_betti, oracle_chain_basis, oracle_differential, oracle_table

from _corpus import paw
from test_fda import PAW_DIAG2, brute_basis
from test_graph import graphs

GOLDEN = Path(__file__).parent / "golden"


def test_paw_oracle_bases():
    g = paw()
    assert list(oracle_chain_basis(g, 2, 2).trails) == PAW_DIAG2
    assert list(oracle_chain_basis(g, 1, 2).trails) == [(0, 3), (1, 3), (3, 0), (3, 1)]
    assert len(oracle_chain_basis(g, 3, 2)) == 0
    assert oracle_betti(g, 2, 2) == 6


def test_paw_oracle_matrix_equals_fast_matrix():
    g = paw()
    lad = enumerate_diagonal(g, 2)
    fast = build_boundary(g, lad.diag(2), lad.subdiag(2))
    slow = oracle_differential(g, 2, 2)
    assert (slow.rows, slow.cols, slow.entries) == (fast.rows, fast.cols, fast.entries)


def test_degree_one_differential_is_empty():
    g = paw()
    m = oracle_differential(g, 1, 1)
    assert (m.rows, m.cols, m.nnz) == (0, 8, 0)


def test_k5_zero_differential():
    assert oracle_differential(complete_graph(5), 3, 3).is_zero()


def test_vertices_give_b00():
    g = Graph(5, [(0, 1)])
    assert oracle_betti(g, 0, 0) == 5


def test_cap_enforced():
    g = Graph(11)
    with pytest.raises(ResourceLimitError, match="10"):
        oracle_chain_basis(g, 1, 1)
    assert len(oracle_chain_basis(g, 0, 0, cap=11)) == 11


def test_cycle5_golden():
    data = json.loads((GOLDEN / "cycle5_oracle.json").read_text())
    golden = {(row["k"], row["ell"]): row["betti"] for row in data["betti"]}
    assert oracle_table(cycle_graph(5), data["ell_max"]) == golden
    assert golden[(2, 2)] == 0


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6), st.integers(0, 4), st.integers(0, 5))
def test_oracle_basis_matches_brute_force(g, k, ell):
    assert list(oracle_chain_basis(g, k, ell).trails) == brute_basis(g, k, ell)


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=6))
def test_vanishing_below_diagonal(g):
    for ell in range(4):
        for k in range(ell + 1, ell + 3):
            assert len(oracle_chain_basis(g, k, ell)) == 0


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=7))
def test_composite_differential_vanishes(g):
    for ell in range(1, 6):
        for k in range(1, ell):
            upper = oracle_differential(g, k + 1, ell)
            lower = oracle_differential(g, k, ell)
            assert lower.compose(upper) == {}


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=6), st.permutations(range(6)))
def test_isomorphism_invariance(g, perm):
    perm = [p for p in perm if p < g.n]
    h = g.relabel(perm)
    for ell in range(4):
        for k in range(ell + 1):
            assert len(oracle_chain_basis(g, k, ell)) == len(oracle_chain_basis(h, k, ell))
            assert oracle_betti(g, k, ell) == oracle_betti(h, k, ell)
