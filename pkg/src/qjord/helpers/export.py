"""Serialise R-matrices and verification reports as JSON or aligned tables."""

from __future__ import annotations

import io
import json
from pathlib import Path

from rich.console import Console
from rich.table import Table
from rich.text import Text

from qjord.contraction.base import RMatrixResult
from qjord.core.errors import ExportBeforeLimit
from qjord.core.matrix import GradedMatrix
from qjord.core.scalars import format_scalar, is_s_free
from qjord.settings import EXPORT_INDENT
from qjord.verify.report import FAILS, HOLDS_WITH_VARIANT, VerificationReport

FORMATS = ("json", "table")

_VERDICT_STYLE = {FAILS: "red", HOLDS_WITH_VARIANT: "yellow"}


def matrix_rows(m: GradedMatrix, require_limit: bool = True) -> list[list[str]]:
    """Canonical entry strings, row by row; raises if s survives and a limit is required."""
    ctx = m.ctx
    rows = [["0"] * m.dim for _ in range(m.dim)]
    for (i, j), v in m.items():
        if require_limit and not is_s_free(v):
            raise ExportBeforeLimit(f"entry ({i}, {j}) still depends on s; take the limit first")
        rows[i][j] = format_scalar(v, ctx)
    return rows


def matrix_document(m: RMatrixResult | GradedMatrix, require_limit: bool = True) -> dict:
    if isinstance(m, RMatrixResult):
        head = {"family": m.family, "reps": list(m.reps), "route": m.route}
        if m.variant:
            head["variant"] = m.variant
        matrix = m.matrix
    else:
        head = {"family": None, "reps": None, "route": None}
        matrix = m
    return {
        **head,
        "rows": matrix.dim,
        "cols": matrix.dim,
        "parity": list(matrix.parity),
        "entries": matrix_rows(matrix, require_limit),
    }


def _render(table: Table) -> str:
    buf = io.StringIO()
    Console(file=buf, width=10_000, color_system=None, soft_wrap=True).print(table)
    return buf.getvalue()


def export_matrix(
    m: RMatrixResult | GradedMatrix,
    fmt: str = "json",
    indent: int = EXPORT_INDENT,
    require_limit: bool = True,
) -> str:
    """JSON document or a column-aligned table of canonical entry strings."""
    doc = matrix_document(m, require_limit)
    if fmt == "json":
        return json.dumps(doc, indent=indent, ensure_ascii=False) + "\n"
    title = Text(m.label) if isinstance(m, RMatrixResult) else None
    table = Table(title=title, show_header=False, show_lines=False)
    for _ in range(doc["cols"]):
        table.add_column(justify="right")
    for row in doc["entries"]:
        table.add_row(*row)
    return _render(table)


def render_report(report: VerificationReport, fmt: str = "table",
                  indent: int = EXPORT_INDENT) -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=indent, ensure_ascii=False) + "\n"
    title = f"{report.suite} — {report.setting}" if report.setting else report.suite
    table = Table(title=Text(title))
    table.add_column("Identity")
    table.add_column("Verdict")
    table.add_column("Detail", overflow="fold")
    for r in report.results:
        style = _VERDICT_STYLE.get(r.verdict, "green")
        detail = r.ledger_key or r.detail
        table.add_row(Text(r.identity), Text(r.verdict, style=style), Text(detail))
    return _render(table)


def render_reports(reports: list[VerificationReport], fmt: str = "table",
                   indent: int = EXPORT_INDENT) -> str:
    """One report as-is; several become a JSON list or consecutive tables."""
    if fmt == "json" and len(reports) != 1:
        return json.dumps([r.to_dict() for r in reports], indent=indent, ensure_ascii=False) + "\n"
    return "".join(render_report(r, fmt, indent) for r in reports)


def write_output(text: str, destination: Path) -> Path:
    destination.parent.mkdir(parents=True, exist_ok=True)
    destination.write_text(text, encoding="utf-8")
    return destination
