"""Scaling sweeps comparing the enumeration counter with its operation bound.

Each row enumerates the diagonal chains of one generated graph and checks
``extension_ops <= n * (L - 1) * N_v**L`` where ``N_v`` is the maximum
degree and ``L`` the deepest nonempty diagonal actually observed.  The hop
diameter is reported next to ``L`` since the two are often conflated.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import asdict, dataclass

from .fda import AUTO, enumerate_diagonal
from .generators import generate, parse_spec
from .graph import INFINITE

BENCH_CSV_COLUMNS = ("family", "size", "seed", "n", "m", "N_v", "diameter", "L", "k_max",
                     "op_counter", "bound", "bound_ok", "wall_s")


@dataclass
class BenchRow:
    family: str
    size: str
    seed: int | None
    n: int
    m: int
    N_v: int
    diameter: int | float
    L: int
    k_max: int | str
    op_counter: int
    bound: int
    bound_ok: bool
    wall_s: float


def operation_bound(n: int, max_degree: int, depth: int) -> int:
    return n * (depth - 1) * max_degree ** depth


def bench_one(spec: str, seed: int | None = None, k_max=AUTO, workers: int = 1) -> BenchRow:
    g = generate(spec, seed)
    family, args = parse_spec(spec)
    t0 = time.perf_counter()
    ladder = enumerate_diagonal(g, k_max, workers=workers)
    wall = time.perf_counter() - t0
    depth = ladder.last_k
    nv = g.max_degree()
    bound = operation_bound(g.n, nv, depth)
    ops = ladder.counter.extension_ops
    return BenchRow(family, " ".join(args[:2] if family == "er" else args), seed, g.n, g.num_edges, nv,
                    g.diameter(), depth, k_max, ops, bound, ops <= bound, wall)


def sweep(family: str, sizes, seeds=(None,), p: float | None = None, k_max=AUTO,
          workers: int = 1) -> list[BenchRow]:
    rows = []
    for size in sizes:
        for seed in seeds:
            spec = f"{family} {size}" if p is None else f"{family} {size} {p}"
            rows.append(bench_one(spec, seed, k_max, workers))
    return rows


# family, sizes, seeds, p, k_max
STANDARD_SUITE = (
    ("star", (10, 20, 40), (None,), None, AUTO),
    ("path", (5, 10), (None,), None, AUTO),
    ("complete", (4, 5, 6, 7), (None,), None, AUTO),
    ("er", (50,), (1, 2, 3, 4, 5), 0.2, 3),
    ("er", (12,), (1, 2, 3), 0.3, AUTO),
)


def standard_suite(workers: int = 1) -> list[BenchRow]:
    rows = []
    for family, sizes, seeds, p, k_max in STANDARD_SUITE:
        rows += sweep(family, sizes, seeds, p, k_max, workers)
    return rows


def rows_to_csv(rows: list[BenchRow]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, BENCH_CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        d = asdict(r)
        d["diameter"] = "inf" if d["diameter"] == INFINITE else d["diameter"]
        d["seed"] = "" if d["seed"] is None else d["seed"]
        d["bound_ok"] = int(d["bound_ok"])
        d["wall_s"] = f"{d['wall_s']:.6f}"
        w.writerow(d)
    return buf.getvalue()
