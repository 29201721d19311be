"""CSV and JSON serialization of verification reports.

Both formats are byte-deterministic for a fixed input and seed: floats
are rendered with repr (shortest round-trip form), JSON keys are sorted,
and row order is fixed by the harness. The CSV column order is the row
schema: graph6, n, m, delta_max, delta_min, diam, triangles, randic,
randic_half, ee, then applicable/value/gap triplets per bound. An
infinite diameter serializes as "inf" in CSV and null in JSON.
"""

from __future__ import annotations

import json
import math
from typing import Dict, Iterable, List, Optional, TextIO

from .bounds import BOUND_IDS
from .harness import GraphRow, VerificationReport

JSON_SCHEMA_VERSION = "1"

CSV_BASE_COLUMNS = (
    "graph6",
    "n",
    "m",
    "delta_max",
    "delta_min",
    "diam",
    "triangles",
    "randic",
    "randic_half",
    "ee",
)

CSV_COLUMNS = CSV_BASE_COLUMNS + tuple(
    f"{bid}_{part}" for bid in BOUND_IDS for part in ("applicable", "value", "gap")
)


def _float_cell(x: Optional[float]) -> str:
    if x is None:
        return ""
    return repr(float(x))


def _diam_cell(diam: float) -> str:
    return "inf" if math.isinf(diam) else str(int(diam))


def csv_header() -> str:
    return ",".join(CSV_COLUMNS)


def row_to_csv(row: GraphRow) -> str:
    cells = [
        row.graph6,
        str(row.n),
        str(row.m),
        str(row.delta_max),
        str(row.delta_min),
        _diam_cell(row.diam),
        str(row.triangles),
        _float_cell(row.randic),
        _float_cell(row.randic_half),
        _float_cell(row.ee),
    ]
    for applicable, value, gap in row.bounds:
        cells.append("1" if applicable else "0")
        cells.append(_float_cell(value))
        cells.append(_float_cell(gap))
    return ",".join(cells)


def write_rows_csv(rows: Iterable[GraphRow], stream: TextIO, header: bool = True):
    if header:
        stream.write(csv_header() + "\n")
    for row in rows:
        stream.write(row_to_csv(row) + "\n")


def csv_row_sink(stream: TextIO, header: bool = True):
    """Streaming sink for exhaustive_verify(row_sink=...): writes chunks
    as they arrive instead of materializing the row list."""
    state = {"header_pending": header}

    def sink(rows: List[GraphRow]) -> None:
        if state["header_pending"]:
            stream.write(csv_header() + "\n")
            state["header_pending"] = False
        for row in rows:
            stream.write(row_to_csv(row) + "\n")

    return sink


def row_to_dict(row: GraphRow) -> Dict[str, object]:
    return {
        "graph6": row.graph6,
        "n": row.n,
        "m": row.m,
        "delta_max": row.delta_max,
        "delta_min": row.delta_min,
        "diam": None if math.isinf(row.diam) else int(row.diam),
        "triangles": row.triangles,
        "randic": float(row.randic),
        "randic_half": float(row.randic_half),
        "ee": float(row.ee),
        "bounds": {
            bid: {
                "applicable": bool(applicable),
                "value": None if value is None else float(value),
                "gap": None if gap is None else float(gap),
            }
            for bid, (applicable, value, gap) in zip(BOUND_IDS, row.bounds)
        },
    }


def report_to_dict(report: VerificationReport) -> Dict[str, object]:
    summary = {}
    for bid, s in report.summaries.items():
        summary[bid] = {
            "applicable": s.applicable,
            "held": s.held,
            "violations": s.violations,
            "equality": s.equality,
            "strict": s.strict,
            "min_gap": None if s.min_gap is None else float(s.min_gap),
            "max_gap": None if s.max_gap is None else float(s.max_gap),
            "quantiles": s.quantiles,
        }
    lemmas = {}
    for lid, s in report.lemma_summaries.items():
        lemmas[lid] = {
            "applicable": s.applicable,
            "violations": s.violations,
            "equality": s.equality,
            "min_slack": None if s.min_slack is None else float(s.min_slack),
        }
    doc: Dict[str, object] = {
        "version": JSON_SCHEMA_VERSION,
        "corpus": report.corpus,
        "tol": report.tol,
        "row_count": report.row_count,
        "summary": summary,
        "lemmas": lemmas,
        "violations": [
            {"graph6": v.graph6, "bound": v.bound_id, "gap": float(v.gap)}
            for v in report.violations
        ],
        "equality_cases": report.equality_cases,
        "lemma_equality": report.lemma_equality,
    }
    if report.structural_families is not None:
        doc["structural_families"] = report.structural_families
    if report.b_bounds_on_nonbipartite is not None:
        doc["b_bounds_on_nonbipartite"] = report.b_bounds_on_nonbipartite
    if report.rows is not None:
        doc["rows"] = [row_to_dict(r) for r in report.rows]
    return doc


def report_to_json(report: VerificationReport) -> str:
    return json.dumps(report_to_dict(report), sort_keys=True, indent=2)
