from __future__ import annotations

import csv
import io
import json
from typing import Any

from ..typing import ReportFormatT
from .runner import SuiteReport

COLUMNS = ("id", "status", "lhs", "rhs", "rel_err", "tolerance", "reference", "wall_time_ms")


def _row(result: Any) -> dict[str, Any]:
    return {column: getattr(result, column) for column in COLUMNS}


def report_dict(report: SuiteReport) -> dict[str, Any]:
    return {
        "suite": report.suite,
        "digits": report.digits,
        "results": [_row(result) for result in report.results],
        "summary": report.summary,
    }


def _text(report: SuiteReport) -> str:
    lines = [f"Suite {report.suite} at {report.digits} digits"]
    for result in report.results:
        line = f"{result.status.upper():<12} {result.id:<24} rel_err={result.rel_err or '-'}"
        if result.tolerance:
            line += f" tolerance={result.tolerance}"
        if result.agreement is not None:
            line += f" matched {result.agreement} significant digits"
        if result.message:
            line += f" ({result.message})"
        lines.append(line)
    summary = report.summary
    lines.append(f"{summary['pass']} passed, {summary['fail']} failed, {summary['experimental']} experimental")
    return "\n".join(lines) + "\n"


def emit_report(report: SuiteReport, format: ReportFormatT = "text") -> str:
    if format == "json":
        return json.dumps(report_dict(report), indent=2) + "\n"
    if format == "csv":
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(_row(result) for result in report.results)
        return buffer.getvalue()
    if format == "text":
        return _text(report)
    raise ValueError(f"Unknown report format {format!r}.")
