import json

import pytest
from hypothesis import given, settings

from emhgraph.bench import BENCH_CSV_COLUMNS, bench_one, operation_bound, rows_to_csv, standard_suite
from emhgraph.boundary import betti_first_diagonal
from emhgraph.errors import DomainError
from emhgraph.generators import generate
from emhgraph.oracle import oracle_table
from emhgraph.report import dumps_json, oracle_to_dict, report_to_dict

from _corpus import paw
from test_graph import graphs


def test_generator_examples():
    s = generate("star 5")
    assert (s.n, s.num_edges, s.diameter()) == (5, 4, 2)
    k = generate("complete 4")
    assert (k.num_edges, k.diameter()) == (6, 1)
    p = generate("path 2")
    assert (p.n, p.sorted_edges()) == (2, [(0, 1)])
    assert generate("complete-bipartite 2 3").num_edges == 6
    assert generate("friendship 3").n == 7
    assert generate("cycle:6").num_edges == 6


def test_er_is_seeded():
    a = generate("er 10 0.3", seed=4)
    assert a == generate("er:10:0.3:4") == generate("er 10 0.3 seed=4")
    assert a != generate("er 10 0.3", seed=5)


@pytest.mark.parametrize("spec", ["", "path", "path 0", "path x", "cycle 2", "er 5 1.5 1", "er 5 0.5",
                                  "complete-bipartite 2", "blob 3"])
def test_bad_specs(spec):
    with pytest.raises(DomainError):
        generate(spec)


def test_er_seed_conflict():
    with pytest.raises(DomainError):
        generate("er 5 0.5 1", seed=2)


def test_bench_one_fields():
    row = bench_one("complete 5")
    assert (row.n, row.N_v, row.L, row.diameter) == (5, 4, 4, 1)
    assert row.bound == operation_bound(5, 4, 4) == 5 * 3 * 4 ** 4
    assert row.bound_ok


def test_triangle_meets_bound_exactly():
    # the pass over diag(2) that finds diag(3) empty is a probe, not an extension
    row = bench_one("complete 3")
    assert (row.L, row.op_counter, row.bound) == (2, 12, 12)
    assert row.bound_ok


def test_capped_run_counts_like_auto():
    from emhgraph.fda import enumerate_diagonal

    g = generate("complete 5")
    auto = enumerate_diagonal(g).counter
    capped = enumerate_diagonal(g, 4).counter
    assert auto.extension_ops == capped.extension_ops
    assert capped.probe_ops == 0 and auto.probe_ops > 0


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=8))
def test_extension_ops_within_bound(g):
    from emhgraph.fda import enumerate_diagonal

    lad = enumerate_diagonal(g)
    if lad.last_k >= 1:
        assert lad.counter.extension_ops <= operation_bound(g.n, g.max_degree(), lad.last_k)
        assert enumerate_diagonal(g, lad.last_k).counter.extension_ops == lad.counter.extension_ops


def test_standard_suite_csv():
    rows = standard_suite()
    assert all(r.bound_ok for r in rows)
    text = rows_to_csv(rows)
    assert text.splitlines()[0] == ",".join(BENCH_CSV_COLUMNS)
    assert len(text.splitlines()) == len(rows) + 1


def test_report_json_is_deterministic():
    a = dumps_json(report_to_dict(betti_first_diagonal(paw()), "paw"))
    b = dumps_json(report_to_dict(betti_first_diagonal(paw()), "paw"))
    assert a == b
    assert json.loads(a)["counters"]["extension_ops"] > 0


def test_oracle_dict_order():
    d = oracle_to_dict(oracle_table(paw(), 3), "paw", 3)
    keys = [(r["ell"], r["k"]) for r in d["betti"]]
    assert keys == sorted(keys)
