"""Command-line front end.

Subcommands: ``compute`` (first-diagonal Betti numbers), ``oracle``
(definition-level table of EMH ranks), ``witness`` (support-graph
constructions) and ``bench`` (operation-count sweeps).
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from . import __version__
from .bench import rows_to_csv, standard_suite, sweep
from .boundary import betti_first_diagonal, parse_field
from .errors import DomainError, GraphParseError, PreconditionError, ResourceLimitError
from .fda import AUTO, enumerate_diagonal
from .generators import generate, is_random
from .graph import Graph, read_edge_list
from .oracle import DEFAULT_CAP, oracle_betti, oracle_chain_basis, oracle_table
from .report import (dumps_json, oracle_to_csv, oracle_to_dict, oracle_to_text, report_to_csv,
                     report_to_dict, report_to_text)
from .witness import (Chain, cycle_support, grid_family_cycle, grid_family_graph, single_trail_support,
                      two_trail_witness)


EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_MISMATCH = 3
EXIT_PARSE = 4
EXIT_RESOURCE = 5
EXIT_IO = 6
EXIT_BOUND = 7

EXIT_CODES_HELP = f"""\
exit codes:
  {EXIT_OK}  success
  {EXIT_CHECK_FAILED}  witness: the given chain is not a cycle
  {EXIT_USAGE}  usage error (bad flag, generator spec, field or trail)
  {EXIT_MISMATCH}  --oracle: enumeration and naive oracle disagree
  {EXIT_PARSE}  edge-list parse error
  {EXIT_RESOURCE}  resource cap exceeded (--max-nnz, --oracle-cap)
  {EXIT_IO}  file could not be read or written
  {EXIT_BOUND}  bench: an operation count exceeded its bound

environment:
  EMH_KMAX, EMH_FIELD, EMH_FORMAT, EMH_SEED, EMH_WORKERS, EMH_MAX_NNZ,
  EMH_ORACLE_CAP provide defaults for the matching flags.
"""


class UsageError(Exception):
    pass


def _env(name, default=None):
    return os.environ.get(f"EMH_{name}", default)


def _kmax(text):
    if text == AUTO:
        return AUTO
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer or 'auto', got {text!r}") from None
    if k < 1:
        raise argparse.ArgumentTypeError("k_max must be >= 1")
    return k


def _opt_int(text):
    return None if text in (None, "") else int(text)


def _add_input(p: argparse.ArgumentParser, required=True):
    src = p.add_mutually_exclusive_group(required=required)
    src.add_argument("--input", metavar="FILE", help="edge-list file")
    src.add_argument("--gen", metavar="SPEC",
                     help="generator: 'path N', 'cycle N', 'star N', 'complete N', "
                          "'complete-bipartite A B', 'friendship M', 'er N P [SEED]', 'grid-family K'")
    p.add_argument("--seed", type=int, default=_opt_int(_env("SEED")), help="seed for random generators")


def _add_output(p: argparse.ArgumentParser, formats=("json", "csv", "text")):
    p.add_argument("--format", choices=formats, default=_env("FORMAT", formats[0]))
    p.add_argument("--out", metavar="PATH", help="write here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="emh", description="First-diagonal eulerian magnitude homology of graphs.",
        epilog=EXIT_CODES_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.RawDescriptionHelpFormatter
    c = sub.add_parser("compute", help="Betti numbers beta_{k,k}", epilog=EXIT_CODES_HELP, formatter_class=fmt)
    _add_input(c)
    c.add_argument("--kmax", type=_kmax, default=_kmax(_env("KMAX", AUTO)))
    c.add_argument("--field", default=_env("FIELD", "rational"), help="rational | prime:P")
    c.add_argument("--oracle", action="store_true", help="cross-check against the naive oracle")
    c.add_argument("--oracle-cap", type=int, default=int(_env("ORACLE_CAP", DEFAULT_CAP)))
    c.add_argument("--workers", type=int, default=int(_env("WORKERS", 1)))
    c.add_argument("--max-nnz", type=int, default=_opt_int(_env("MAX_NNZ")))
    c.add_argument("--timing", action="store_true", help="include wall-clock timings in JSON")
    _add_output(c)

    o = sub.add_parser("oracle", help="naive EMH_{k,ell} table for small graphs",
                       epilog=EXIT_CODES_HELP, formatter_class=fmt)
    _add_input(o)
    o.add_argument("--lmax", type=int, default=4, help="largest length grading ell")
    o.add_argument("--oracle-cap", type=int, default=int(_env("ORACLE_CAP", DEFAULT_CAP)))
    _add_output(o)

    w = sub.add_parser("witness", help="support graphs of homology cycles",
                       epilog=EXIT_CODES_HELP, formatter_class=fmt)
    w.add_argument("kind", choices=("single", "two-trail", "grid", "support"))
    _add_input(w, required=False)
    w.add_argument("--trail", help="single: space-separated vertex labels")
    w.add_argument("--x1", help="two-trail: first trail labels")
    w.add_argument("--x2", help="two-trail: second trail labels")
    w.add_argument("--k", type=int, help="grid: number of steps")
    w.add_argument("--term", action="append", default=[],
                   help="support: 'COEF v0 v1 ... vk', repeat per trail")
    _add_output(w, formats=("text", "json"))

    b = sub.add_parser("bench", help="operation counts against the n(L-1)N_v^L bound",
                       epilog=EXIT_CODES_HELP, formatter_class=fmt)
    b.add_argument("--family", help="generator family; omit to run the standard suite")
    b.add_argument("--sizes", default="", help="comma-separated sizes")
    b.add_argument("--p", type=float, help="edge probability (er)")
    b.add_argument("--seeds", default="", help="comma list or range A-B (er)")
    b.add_argument("--kmax", type=_kmax, default=_kmax(_env("KMAX", AUTO)))
    b.add_argument("--workers", type=int, default=int(_env("WORKERS", 1)))
    b.add_argument("--out", metavar="PATH")
    return parser


def _load(args) -> tuple[Graph, str]:
    if args.input:
        return read_edge_list(args.input), args.input
    spec = args.gen
    if is_random(spec) and args.seed is None and len(spec.replace(":", " ").split()) < 4:
        raise UsageError(f"random generator {spec!r} needs --seed")
    g = generate(spec, args.seed)
    source = f"gen:{spec}" + (f" seed={args.seed}" if args.seed is not None else "")
    return g, source


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _oracle_check(g: Graph, k_max, levels, cap: int) -> dict:
    """Compare enumerated bases and Betti numbers to the naive oracle."""
    ladder = enumerate_diagonal(g, k_max)
    mismatches = []
    top = ladder.last_k + (1 if ladder.exhausted else 0)
    for k in range(top + 1):
        if set(ladder.diag(k).trails) != set(oracle_chain_basis(g, k, k, cap).trails):
            mismatches.append(f"diag({k})")
    for k in range(1, ladder.last_k + 1):
        if set(ladder.subdiag(k).trails) != set(oracle_chain_basis(g, k - 1, k, cap).trails):
            mismatches.append(f"subdiag({k})")
    for lv in levels:
        ob = oracle_betti(g, lv.k, lv.k, cap)
        if ob != lv.betti:
            mismatches.append(f"betti({lv.k}): fda {lv.betti} oracle {ob}")
    return {"checked": True, "mismatches": mismatches}


def cmd_compute(args) -> int:
    g, source = _load(args)
    field = parse_field(args.field)
    if args.oracle and g.n > args.oracle_cap:
        raise ResourceLimitError(f"--oracle needs n <= {args.oracle_cap}, graph has {g.n} vertices")
    report = betti_first_diagonal(g, args.kmax, field, workers=args.workers, max_nnz=args.max_nnz,
                                  cross_check=field != "rational")
    oracle = _oracle_check(g, args.kmax, report.levels, args.oracle_cap) if args.oracle else None
    if args.format == "json":
        text = dumps_json(report_to_dict(report, source, oracle, include_timing=args.timing))
    elif args.format == "csv":
        text = report_to_csv(report)
    else:
        text = report_to_text(report, source)
        if oracle is not None:
            text += "oracle: " + ("agree" if not oracle["mismatches"] else "; ".join(oracle["mismatches"])) + "\n"
    _emit(text, args.out)
    if oracle is not None and oracle["mismatches"]:
        print("emh: oracle mismatch: " + "; ".join(oracle["mismatches"]), file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_oracle(args) -> int:
    g, source = _load(args)
    table = oracle_table(g, args.lmax, args.oracle_cap)
    if args.format == "json":
        text = dumps_json(oracle_to_dict(table, source, args.lmax))
    elif args.format == "csv":
        text = oracle_to_csv(table)
    else:
        text = oracle_to_text(table)
    _emit(text, args.out)
    return EXIT_OK


def _tokens(text, flag) -> list[str]:
    if not text:
        raise UsageError(f"{flag} is required")
    return text.split()


def _resolve(g: Graph, tokens: list[str]) -> tuple[int, ...]:
    """Vertex ids for label tokens; generated graphs use integer labels."""
    out = []
    for tok in tokens:
        try:
            out.append(g.id_of(tok))
        except DomainError:
            if not tok.lstrip("-").isdigit():
                raise
            out.append(g.id_of(int(tok)))
    return tuple(out)


def _witness_json(w, checks) -> str:
    g = w.graph
    lab = g.labels
    data = {
        "vertices": [str(x) for x in lab],
        "edges": [{"u": str(lab[u]), "v": str(lab[v]), "role": w.roles[(u, v)]} for u, v in sorted(g.edges)],
        "forbidden": [{"u": str(lab[u]), "v": str(lab[v])} for u, v in sorted(w.forbidden)],
        "checks": checks,
    }
    return dumps_json(data)


def cmd_witness(args) -> int:
    checks: dict = {}
    status = EXIT_OK
    if args.kind == "two-trail":
        x1, x2 = _tokens(args.x1, "--x1"), _tokens(args.x2, "--x2")
        w = two_trail_witness(x1, x2)
        g = w.graph
        t1, t2 = g.ids(x1), g.ids(x2)
        checks = {
            "difference_is_cycle": cycle_support(g, Chain.of([(1, t1), (-1, t2)])).is_cycle,
            "x1_boundary_nonzero": not cycle_support(g, Chain.of([(1, t1)])).is_cycle,
            "x2_boundary_nonzero": not cycle_support(g, Chain.of([(1, t2)])).is_cycle,
        }
    elif args.kind == "grid":
        if args.k is None:
            raise UsageError("--k is required")
        w = grid_family_graph(args.k)
        checks = {"alternating_sum_is_cycle": cycle_support(w.graph, grid_family_cycle(w, args.k)).is_cycle}
    else:
        if not (args.input or args.gen):
            raise UsageError(f"witness {args.kind} needs --input or --gen")
        g, _ = _load(args)
        if args.kind == "single":
            w = single_trail_support(g, _resolve(g, _tokens(args.trail, "--trail")))
        else:
            if not args.term:
                raise UsageError("--term is required")
            terms = []
            for t in args.term:
                toks = t.split()
                if len(toks) < 2:
                    raise UsageError(f"--term needs a coefficient and a trail, got {t!r}")
                terms.append((int(toks[0]), _resolve(g, toks[1:])))
            res = cycle_support(g, Chain.of(terms))
            w = res.witness
            checks = {"is_cycle": res.is_cycle, "diagnostic": res.diagnostic()}
            if not res.is_cycle:
                status = EXIT_CHECK_FAILED
    if args.format == "json":
        text = _witness_json(w, checks)
    else:
        head = "".join(f"# {k}: {v}\n" for k, v in checks.items())
        text = head + w.to_text()
    _emit(text, args.out)
    return status


def _parse_seeds(text):
    if not text:
        return (None,)
    if "-" in text and "," not in text:
        a, b = text.split("-")
        return tuple(range(int(a), int(b) + 1))
    return tuple(int(s) for s in text.split(","))


def cmd_bench(args) -> int:
    if args.family is None:
        rows = standard_suite(args.workers)
    else:
        if not args.sizes:
            raise UsageError("--sizes is required with --family")
        sizes = [s.strip() for s in args.sizes.split(",")]
        seeds = _parse_seeds(args.seeds)
        if args.family == "er" and (args.p is None or seeds == (None,)):
            raise UsageError("er sweeps need --p and --seeds")
        rows = sweep(args.family, sizes, seeds, args.p, args.kmax, args.workers)
    _emit(rows_to_csv(rows), args.out)
    bad = [r for r in rows if not r.bound_ok]
    for r in bad:
        print(f"emh: bound exceeded: {r.family} {r.size} seed={r.seed} ops={r.op_counter} bound={r.bound}",
              file=sys.stderr)
    return EXIT_BOUND if bad else EXIT_OK


COMMANDS = {"compute": cmd_compute, "oracle": cmd_oracle, "witness": cmd_witness, "bench": cmd_bench}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except GraphParseError as e:
        print(f"emh: parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceLimitError as e:
        print(f"emh: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except (UsageError, DomainError, PreconditionError, ValueError) as e:
        print(f"emh: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"emh: {e}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
