"""Serialization of Betti reports and oracle tables.

JSON output is versioned by ``schema_version`` and, unless timings are
requested, depends only on the graph and the computation settings, so equal
configurations give byte-identical files.

CSV columns for a Betti report: ``k,dim_diag,dim_subdiag,rank,betti``.
CSV columns for an oracle table: ``k,ell,betti``.
"""

from __future__ import annotations

import csv
import io
import json

from .boundary import BettiReport

SCHEMA_VERSION = 1

REPORT_CSV_COLUMNS = ("k", "dim_diag", "dim_subdiag", "rank", "betti")
ORACLE_CSV_COLUMNS = ("k", "ell", "betti")


def report_to_dict(report: BettiReport, source: str, oracle: dict | None = None,
                   include_timing: bool = False) -> dict:
    out = {
        "schema_version": SCHEMA_VERSION,
        "source": source,
        "graph": {"n": report.n, "edges": report.num_edges, "max_degree": report.max_degree},
        "field": report.field,
        "k_max": report.k_max,
        "exhausted": report.exhausted,
        "betti": {str(lv.k): lv.betti for lv in report.levels},
        "levels": [
            {"k": lv.k, "dim_diag": lv.dim_diag, "dim_subdiag": lv.dim_subdiag,
             "rank": lv.rank, "betti": lv.betti}
            for lv in report.levels
        ],
        "counters": {
            "extension_ops": report.counter.extension_ops,
            "gap_ops": report.counter.gap_ops,
            "probe_ops": report.counter.probe_ops,
        },
    }
    if report.torsion_warnings:
        out["torsion_warnings"] = report.torsion_warnings
    if oracle is not None:
        out["oracle"] = oracle
    if include_timing:
        out["timings"] = {k: round(v, 6) for k, v in sorted(report.timings.items())}
    return out


def dumps_json(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def report_to_csv(report: BettiReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(REPORT_CSV_COLUMNS)
    for lv in report.levels:
        w.writerow([lv.k, lv.dim_diag, lv.dim_subdiag, lv.rank, lv.betti])
    return buf.getvalue()


def _table(header, rows) -> str:
    widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
    fmt = " | ".join("{:>%d}" % w for w in widths)
    lines = [fmt.format(*header), "-+-".join("-" * w for w in widths)]
    lines += [fmt.format(*r) for r in rows]
    return "\n".join(lines) + "\n"


def report_to_text(report: BettiReport, source: str = "") -> str:
    head = f"# {source}  n={report.n}  |E|={report.num_edges}  field={report.field}\n" if source else ""
    rows = [(lv.k, lv.dim_diag, lv.dim_subdiag, lv.rank, lv.betti) for lv in report.levels]
    return head + _table(("k", "dim EMC_{k,k}", "dim EMC_{k-1,k}", "rank", "beta_{k,k}"), rows)


def oracle_to_dict(table: dict[tuple[int, int], int], source: str, ell_max: int) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "source": source,
        "ell_max": ell_max,
        "betti": [{"k": k, "ell": ell, "betti": b} for (k, ell), b in sorted(table.items(), key=lambda kv: (kv[0][1], kv[0][0]))],
    }


def oracle_to_csv(table: dict[tuple[int, int], int]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(ORACLE_CSV_COLUMNS)
    for (k, ell), b in sorted(table.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        w.writerow([k, ell, b])
    return buf.getvalue()


def oracle_to_text(table: dict[tuple[int, int], int]) -> str:
    ells = sorted({ell for _, ell in table})
    ks = sorted({k for k, _ in table})
    rows = [[k] + [table.get((k, ell), "") for ell in ells] for k in ks]
    return _table(["k \\ ell"] + [str(e) for e in ells], rows)
