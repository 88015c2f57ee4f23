from __future__ import annotations

__all__ = (
    "SCHEMA_VERSION",
    "CheckResult",
    "IdentityEntry",
    "ResultCache",
    "SuiteReport",
    "catalog",
    "emit_report",
    "gather_entries",
    "get_entry",
    "run_check",
    "run_suite",
    "tolerance_for",
)

from .cache import SCHEMA_VERSION, ResultCache
from .catalog import IdentityEntry, catalog, gather_entries, get_entry
from .evaluator import CheckResult, run_check, tolerance_for
from .report import emit_report
from .runner import SuiteReport, run_suite
