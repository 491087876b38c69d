"""Text, JSON, CSV and LaTeX renderings of correspondence tables."""

from __future__ import annotations

import csv
import io
import json

from .correspondence import (
    CharParams,
    CorrespondenceTable,
    IrrLabel,
    LeviClass,
    SpringerDatum,
)
from .partitions import MultiPartition, Partition

FORMATS = ("text", "json", "csv", "latex")

TABLE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["n", "ell", "series"],
    "additionalProperties": False,
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "ell": {"type": "integer", "minimum": 0},
        "series": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["nu", "weyl", "rows"],
                "additionalProperties": False,
                "properties": {
                    "nu": {"type": "array", "items": {"type": "integer", "minimum": 1}},
                    "weyl": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["degree", "copies"],
                            "additionalProperties": False,
                            "properties": {
                                "degree": {"type": "integer", "minimum": 1},
                                "copies": {"type": "integer", "minimum": 1},
                            },
                        },
                    },
                    "rows": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["lambda", "mu"],
                            "additionalProperties": False,
                            "properties": {
                                "lambda": {
                                    "type": "object",
                                    "patternProperties": {
                                        "^[1-9][0-9]*$": {
                                            "type": "array",
                                            "items": {"type": "integer", "minimum": 1},
                                        }
                                    },
                                    "additionalProperties": False,
                                },
                                "mu": {"type": "array", "items": {"type": "integer", "minimum": 1}},
                            },
                        },
                    },
                },
            },
        },
    },
}


def table_to_dict(table: CorrespondenceTable) -> dict:
    """JSON-ready form.  ``weyl`` lists, per block size ``degree``, the number of
    ``copies`` of that block; the relative Weyl group is the product of the
    symmetric groups on the copies."""
    series = []
    for levi, rows in table.series():
        series.append(
            {
                "nu": list(levi.nu),
                "weyl": [{"degree": q, "copies": levi.weyl_profile[q]} for q in levi.weyl_profile],
                "rows": [
                    {
                        "lambda": {str(k): list(p) for k, p in row.irr.mp.components},
                        "mu": list(row.orbit),
                    }
                    for row in rows
                ],
            }
        )
    return {"n": table.params.n, "ell": table.params.ell, "series": series}


def table_from_dict(doc: dict) -> CorrespondenceTable:
    params = CharParams(doc["n"], doc["ell"])
    rows = []
    for block in doc["series"]:
        levi = LeviClass(Partition(block["nu"]), params.ell)
        for row in block["rows"]:
            comps = {int(k): Partition(v) for k, v in row["lambda"].items()}
            irr = IrrLabel(MultiPartition.from_mapping(comps))
            rows.append(SpringerDatum(levi, irr, Partition(row["mu"])))
    return CorrespondenceTable(params, tuple(rows))


def to_json(table: CorrespondenceTable) -> str:
    return json.dumps(table_to_dict(table), indent=2) + "\n"


def from_json(text: str) -> CorrespondenceTable:
    return table_from_dict(json.loads(text))


def to_csv(table: CorrespondenceTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["series", "levi", "lambda", "mu"])
    for row in table.rows:
        writer.writerow([str(row.levi.nu), row.levi.shape(), str(row.irr), str(row.orbit)])
    return buf.getvalue()


def to_text(table: CorrespondenceTable) -> str:
    p = table.params
    lines = [f"Generalized Springer correspondence for GL({p.n}), ell = {p.ell}"]
    cols = [("series", "levi", "lambda", "mu")]
    for levi, rows in table.series():
        for k, row in enumerate(rows):
            head = (str(levi.nu), levi.shape()) if k == 0 else ("", "")
            cols.append(head + (str(row.irr), str(row.orbit)))
    widths = [max(len(c[i]) for c in cols) for i in range(4)]
    for k, c in enumerate(cols):
        lines.append("  ".join(s.ljust(w) for s, w in zip(c, widths)).rstrip())
        if k == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def ydiagram(lam: Partition) -> str:
    """Young diagram via the ytableau package, one row per part."""
    return r"\ydiagram{" + ",".join(map(str, lam)) + "}" if lam else r"\varnothing"


def to_latex(table: CorrespondenceTable) -> str:
    p = table.params
    out = [
        "% requires \\usepackage{ytableau}",
        r"\begin{tabular}{|l|l|l|}",
        r"\hline",
        rf"$\nu$ & $\boldsymbol{{\lambda}}$ & $\psi_\nu(\boldsymbol{{\lambda}}) \in \mathrm{{Part}}({p.n})$ \\",
        r"\hline",
    ]
    for levi, rows in table.series():
        for k, row in enumerate(rows):
            label = f"$({','.join(map(str, levi.nu))})$" if k == 0 else ""
            comps = r" ,\ ".join(rf"{ydiagram(c)}_{{{q}}}" for q, c in row.irr.mp.components)
            out.append(rf"{label} & ${comps}$ & ${ydiagram(row.orbit)}$ \\")
        out.append(r"\hline")
    out.append(r"\end{tabular}")
    return "\n".join(out) + "\n"


def render_table(table: CorrespondenceTable, fmt: str) -> str:
    renderers = {"text": to_text, "json": to_json, "csv": to_csv, "latex": to_latex}
    try:
        return renderers[fmt](table)
    except KeyError:
        raise ValueError(f"unknown format {fmt!r}; choose from {FORMATS}") from None
