from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Container, Optional

import django
from django.apps import apps

from ..app_settings import VerifySettings
from ..mpcore import PrecisionContext
from ..typing import SuiteT
from .cache import ResultCache
from .catalog import gather_entries, get_entry
from .evaluator import CheckResult, run_check

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    digits: int
    results: list[CheckResult]

    @property
    def summary(self) -> dict[str, int]:
        counts = Counter(result.status for result in self.results)
        return {status: counts[status] for status in ("pass", "fail", "experimental")}

    @property
    def theorem_failures(self) -> list[CheckResult]:
        return [result for result in self.results if result.kind == "theorem" and result.status == "fail"]

    @property
    def exit_code(self) -> int:
        """Non-zero iff a theorem fails; conjectures and cross checks never fail the suite."""
        return 1 if self.theorem_failures else 0


def _initialize_worker() -> None:
    if not apps.ready:
        django.setup()


def _run_in_worker(
    id: str, ctx: PrecisionContext, settings: VerifySettings, use_cache: bool
) -> tuple[CheckResult, dict[str, str]]:
    cache = ResultCache(settings.CACHE_ALIAS, read_only=True) if use_cache else None
    result = run_check(get_entry(id, settings), ctx, cache, settings)
    return result, cache.pending if cache is not None else {}


def run_suite(
    suite: SuiteT,
    ctx: PrecisionContext,
    jobs: int = 1,
    cache: Optional[ResultCache] = None,
    settings: Optional[VerifySettings] = None,
    include: Container[str] = (),
    ignore: Container[str] = (),
) -> SuiteReport:
    """Run the checks of a suite, in parallel when `jobs > 1`.

    Results are reported in catalog order. Workers only read the cache; the calling process writes
    the values they computed.
    """
    settings = settings or VerifySettings()
    entries = gather_entries(suite, include=include, ignore=ignore, settings=settings)
    logger.info("Running %d checks of suite %s at %d digits", len(entries), suite, ctx.digits)

    if jobs <= 1 or len(entries) <= 1:
        results = [run_check(entry, ctx, cache, settings) for entry in entries]
        return SuiteReport(suite, ctx.digits, results)

    with ProcessPoolExecutor(max_workers=jobs, initializer=_initialize_worker) as executor:
        futures = [
            executor.submit(_run_in_worker, entry.id, ctx, settings, cache is not None) for entry in entries
        ]
        results = []
        for future in futures:
            result, pending = future.result()
            if cache is not None and pending:
                cache.write_pending(pending)
            results.append(result)
    return SuiteReport(suite, ctx.digits, results)
