"""Rendering of correspondence rows as markdown, CSV, or JSON.

The markdown table follows the grid orientation of the source tables
(rows p, columns q); CSV emits one row per cell with a fixed header; JSON
emits a versioned document.
"""

from __future__ import annotations

import csv
import io
import json

from .correspondence import CorrespondenceRow
from .explore import Classification, report_to_dict
from .tiling import GeometryClass, tiling_report_to_dict

JSON_SCHEMA_VERSION = 1

CSV_HEADER = [
    "p",
    "q",
    "r",
    "cluster_classification",
    "cluster_type",
    "class_size",
    "max_weight",
    "tiling_geometry",
    "tiling_name",
    "coxeter_name",
    "group_order",
    "match",
]

_CLUSTER_TAG = {
    Classification.FINITE_TYPE: "fin",
    Classification.FINITE_MUTATION_TYPE: "fin-mut",
    Classification.INFINITE_MUTATION_TYPE: "inf-mut",
    Classification.INCONCLUSIVE: "???",
}

_TILING_TAG = {
    GeometryClass.SPHERICAL: "sph",
    GeometryClass.PLANAR: "pla",
    GeometryClass.HYPERBOLIC: "hyp",
}


def row_to_dict(row: CorrespondenceRow) -> dict:
    cluster = report_to_dict(row.cluster)
    return {
        "p": row.p,
        "q": row.q,
        "r": row.r,
        "cluster": cluster,
        "tiling": tiling_report_to_dict(row.tiling),
        "match": row.match,
    }


def cell_text(row_dict: dict) -> str:
    """Compact cell label: category tag per side, plus the type name."""
    cluster = row_dict["cluster"]
    tag = _CLUSTER_TAG[Classification(cluster["classification"])]
    if cluster["type_name"]:
        tag = f"{tag}:{cluster['type_name']}"
    ttag = _TILING_TAG[GeometryClass(row_dict["tiling"]["geometry"])]
    text = f"{tag}|{ttag}"
    if not row_dict["match"]:
        text += " ✗"
    return text


def render_markdown_grid(row_dicts: list[dict]) -> str:
    ps = sorted({d["p"] for d in row_dicts})
    qs = sorted({d["q"] for d in row_dicts})
    by_cell = {(d["p"], d["q"]): d for d in row_dicts}
    lines = ["| p\\q | " + " | ".join(str(q) for q in qs) + " |"]
    lines.append("|" + "---|" * (len(qs) + 1))
    for p in ps:
        cells = [
            cell_text(by_cell[(p, q)]) if (p, q) in by_cell else ""
            for q in qs
        ]
        lines.append(f"| {p} | " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def _csv_record(d: dict) -> list:
    cluster = d["cluster"]
    tiling = d["tiling"]
    return [
        d["p"],
        d["q"],
        d["r"],
        cluster["classification"],
        cluster["type_name"] or "",
        cluster["class_size"] if cluster["class_size"] is not None else "",
        cluster["max_weight_seen"],
        tiling["geometry"],
        tiling["tiling_name"],
        tiling["coxeter_name"],
        tiling["group_order"] if tiling["group_order"] is not None else "",
        "true" if d["match"] else "false",
    ]


def render_csv(row_dicts: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for d in row_dicts:
        writer.writerow(_csv_record(d))
    return buf.getvalue()


def render_json(row_dicts: list[dict]) -> str:
    doc = {"schema_version": JSON_SCHEMA_VERSION, "rows": row_dicts}
    return json.dumps(doc, sort_keys=True, indent=1) + "\n"


def render_rows(row_dicts: list[dict], fmt: str) -> str:
    if fmt == "markdown":
        return render_markdown_grid(row_dicts)
    if fmt == "csv":
        return render_csv(row_dicts)
    if fmt == "json":
        return render_json(row_dicts)
    raise ValueError(f"unknown format {fmt!r}")
