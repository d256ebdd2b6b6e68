"""Plain-table, CSV and JSON-lines rendering of index reports."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .indices import IndexReport

COLUMNS = ("voter", "weight", "tbp", "pbp", "pii", "ppi", "sat", "nsat", "psat", "pgi", "formula_used")
RATIONAL_COLUMNS = ("pbp", "pii", "ppi", "sat", "nsat", "psat")
UNDEFINED = "undefined"


def exact(q: Fraction | None) -> str:
    if q is None:
        return UNDEFINED
    return f"{q.numerator}/{q.denominator}"


def decimal(q: Fraction | None) -> str:
    if q is None:
        return UNDEFINED
    return f"{float(q):.6f}"


def parse_exact(text: str) -> Fraction | None:
    return None if text == UNDEFINED else Fraction(text)


def _weights(report: IndexReport, m: int) -> str:
    sys = report.system
    if not sys.rows:
        return "-"
    return "|".join(str(row.weights[m]) for row in sys.rows)


def records(report: IndexReport) -> list[dict]:
    out = []
    for m, v in enumerate(report.voters):
        rec = {"voter": v.voter, "weight": _weights(report, m), "tbp": v.tbp}
        for col in RATIONAL_COLUMNS:
            rec[col] = getattr(v, col)
        rec["pgi"] = v.pgi
        rec["formula_used"] = v.formula_used.name if v.formula_used else "-"
        out.append(rec)
    return out


def render_plain(report: IndexReport) -> str:
    header = list(COLUMNS)
    body = []
    for rec in records(report):
        row = []
        for col in COLUMNS:
            value = rec[col]
            if col in RATIONAL_COLUMNS:
                value = UNDEFINED if value is None else f"{exact(value)} ({decimal(value)})"
            row.append(str(value))
        body.append(row)
    widths = [max(len(r[i]) for r in [header] + body) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in [header] + body]
    sys = report.system
    title = f"voters={sys.n} wt(f)={report.weight}"
    if sys.forbidden:
        title += " forbidden=" + ",".join(
            "{" + "+".join(sys.voters[k] for k in sorted(c.members)) + "}" for c in sys.forbidden)
    return "\n".join([title] + lines + [f"note: {n}" for n in report.notes]) + "\n"


def render_csv(report: IndexReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for rec in records(report):
        writer.writerow([exact(rec[c]) if c in RATIONAL_COLUMNS else rec[c] for c in COLUMNS])
    return buf.getvalue()


def render_jsonl(report: IndexReport) -> str:
    lines = []
    for rec in records(report):
        obj = {}
        for col in COLUMNS:
            if col in RATIONAL_COLUMNS:
                obj[col] = exact(rec[col])
                obj[col + "_decimal"] = decimal(rec[col])
            else:
                obj[col] = rec[col]
        lines.append(json.dumps(obj))
    return "\n".join(lines) + "\n"


def parse_jsonl(text: str) -> list[dict]:
    """Read rendered JSON lines back, with rationals as Fractions."""
    out = []
    for line in text.splitlines():
        if not line.strip():
            continue
        obj = json.loads(line)
        rec = {c: obj[c] for c in COLUMNS}
        for col in RATIONAL_COLUMNS:
            rec[col] = parse_exact(obj[col])
        out.append(rec)
    return out


RENDERERS = {"plain": render_plain, "csv": render_csv, "jsonl": render_jsonl}
