"""Contains CSV and Markdown rendering of threshold tables and sweep reports.

Copyright (C) 2025 froblink contributors. Released under the terms in the LICENSE file.
"""

from __future__ import annotations

import csv
import io
import logging
import os
import tempfile
from pathlib import Path
from typing import Iterable, Literal, Mapping, Sequence

from froblink.frobenius.thresholds import ThresholdTable
from froblink.linkage.comparison import COMPARISON_COLUMNS, ComparisonReport, ComparisonRow

LOGGER = logging.getLogger(__name__)

ReportFormat = Literal["csv", "md"]

THRESHOLD_COLUMNS = ("ideal_id", "kind", "p", "e", "q", "nu", "lower", "upper", "certified")


def csv_text(columns: Sequence[str], records: Iterable[Mapping[str, object]]) -> str:
    """Render records as CSV with a header and LF line endings."""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(columns), lineterminator="\n")
    writer.writeheader()
    for record in records:
        writer.writerow(record)
    return buffer.getvalue()


def threshold_csv(tables: Iterable[ThresholdTable]) -> str:
    records = [record for table in tables for record in table.records()]
    return csv_text(THRESHOLD_COLUMNS, records)


def comparison_csv(report: ComparisonReport) -> str:
    return csv_text(COMPARISON_COLUMNS, report.records())


def _mark(value: bool | None) -> str:
    if value is None:
        return "n/a"
    return "yes" if value else "NO"


def _markdown_row(row: ComparisonRow) -> str:
    if row.failed:
        return f"| {row.p} | {row.e} | {row.q} | error: {row.error} |" + " |" * 11
    cells = [
        row.p,
        row.e,
        row.q,
        row.nu_fpt_I,
        row.nu_fpt_L,
        row.nu_fpt_J,
        row.nu_lce_Ic,
        row.nu_lce_Lc,
        row.nu_lce_Jc,
        row.gap,
        _mark(row.chain_ok),
        _mark(row.lce_eq),
        _mark(row.mapage_ok and row.ratio_ok),
        _mark(row.structure_ok),
        _mark(row.f_pure_ok),
    ]
    return "| " + " | ".join(str(cell) for cell in cells) + " |"


def comparison_markdown(report: ComparisonReport) -> str:
    """Markdown document with a header block, the row table and a summary footer."""
    lines = [
        f"# Generic linkage sweep: {report.label}",
        "",
        f"- ring variables: {', '.join(report.variables)}",
        f"- height c = {report.height}, generators r = {report.generators}, "
        f"variables of S = {report.n_S}",
        f"- bad-prime bound: {report.bad_prime_bound}",
        f"- primes: {', '.join(str(p) for p in report.primes)}; levels 1..{report.e_max}",
        "",
        "| p | e | q | nu fpt I | nu fpt L | nu fpt J | nu lce I^c | nu lce L^c | nu lce J^c "
        "| gap | chain | lce eq | fpt(I) vs fpt(J) | structure | F-pure |",
        "|" + "---|" * 15,
    ]
    lines.extend(_markdown_row(row) for row in report.rows)
    lines += [
        "",
        "## Summary",
        "",
        "Implied by containments, so a NO here points at a bug:",
        "",
        f"- Fpt(L) <= Fpt(I) <= Fpt(J) + gap on every row: {_mark(report.chain_ok)}",
        f"- nu of L^c <= nu of J^c at every level: {_mark(report.lce_order_ok)}",
        f"- L in I S, L in J, I J in L, ht L = c: {_mark(report.structure_ok)}",
        f"- F-pure at the lower fpt bound: {_mark(report.f_pure_ok)}",
        "",
        "Proved only in the limit p -> infinity, observed here at finite levels:",
        "",
        f"- nu of I^c and L^c agree at every level: {_mark(report.lce_levelwise_equal)}",
        "- (c/n_S) Fpt(I) <= Fpt(J), (c/r) Fpt(I) <= Fpt(J) and, for r = c, "
        f"Fpt(I) <= Fpt(J): {_mark(report.mapage_ok)}",
        f"- gap <= (c r + 2)/p at the top level: {_mark(report.gap_bound_ok)}",
        "",
        "Heights are computed as n - dim; the input is assumed equidimensional.",
        "Upper fpt bounds are (nu + g)/q for an ideal with g generators.",
        "",
    ]
    return "\n".join(lines)


def atomic_write_text(path: Path, text: str) -> None:
    """Write ``text`` to ``path`` through a temporary file and a rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with tempfile.NamedTemporaryFile(
        "w", dir=path.parent, prefix=f".{path.name}.", delete=False, encoding="utf-8"
    ) as handle:
        handle.write(text)
        temporary = Path(handle.name)
    try:
        os.replace(temporary, path)
    except OSError:
        temporary.unlink(missing_ok=True)
        raise


def write_comparison_report(
    report: ComparisonReport,
    output_dir: Path,
    formats: Sequence[ReportFormat] = ("csv", "md"),
    stem: str = "report",
) -> list[Path]:
    """Render every requested format, then write them; returns the written paths."""
    renderers = {"csv": comparison_csv, "md": comparison_markdown}
    rendered = {fmt: renderers[fmt](report) for fmt in formats}
    written = []
    for fmt, text in rendered.items():
        path = Path(output_dir) / f"{stem}.{fmt}"
        atomic_write_text(path, text)
        LOGGER.info("Wrote %s", path)
        written.append(path)
    return written
