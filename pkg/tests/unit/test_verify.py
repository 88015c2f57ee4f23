import csv
import dataclasses
import io
import json
from fractions import Fraction

import pytest

from bessel_moments.app_settings import VerifySettings
from bessel_moments.exceptions import UnknownSuiteError
from bessel_moments.mpcore import PrecisionContext
from bessel_moments.verify import (
    CheckResult,
    IdentityEntry,
    ResultCache,
    SuiteReport,
    catalog,
    emit_report,
    gather_entries,
    get_entry,
    run_check,
    run_suite,
    tolerance_for,
)
from bessel_moments.verify.catalog.base import ZERO, constant, value

verify_settings = VerifySettings(ZETA71_PRIME_BOUND=200)

CHEAP_CHECKS = ["CLOSED-ikm121", "T1b-integrality", "K1-S1-3^2"]


def _result(id: str, kind="theorem", status="pass") -> CheckResult:
    return CheckResult(
        id=id,
        kind=kind,
        status=status,
        lhs="1",
        rhs="1",
        abs_err="0",
        rel_err="0",
        tolerance="1.000000000E-10",
        reference="",
        wall_time=0.0123,
    )


def test_catalog_ids():
    entries = catalog(verify_settings)
    ids = [entry.id for entry in entries]
    assert len(entries) >= 40
    assert len(ids) == len(set(ids))
    assert get_entry("T4a-1", verify_settings).group == "lvalues"
    assert all(entry.tolerance_class != "experimental" for entry in entries if entry.kind == "theorem")
    with pytest.raises(KeyError):
        get_entry("T0-missing", verify_settings)


def test_experimental_theorem_rejected():
    with pytest.raises(ValueError):
        IdentityEntry("T-bad", "theorem", "moments", ZERO, ZERO, "experimental", "")


def test_suites():
    theorems = gather_entries("theorems", settings=verify_settings)
    assert all(entry.kind != "conjecture" and entry.group != "kloosterman" for entry in theorems)
    kloosterman = gather_entries("kloosterman", settings=verify_settings)
    assert kloosterman and all(entry.group == "kloosterman" for entry in kloosterman)
    conjectures = gather_entries("conjectures", settings=verify_settings)
    assert "CONJ2-zeta71" in {entry.id for entry in conjectures}
    assert all(entry.kind == "conjecture" for entry in conjectures)
    assert len(gather_entries("all", settings=verify_settings)) == len(catalog(verify_settings))
    with pytest.raises(UnknownSuiteError):
        gather_entries("everything", settings=verify_settings)  # type: ignore[arg-type]


def test_include_and_ignore():
    included = gather_entries("all", include=["CLOSED-ikm121", "T4a-1"], settings=verify_settings)
    assert [entry.id for entry in included] == ["CLOSED-ikm121", "T4a-1"]
    ignored = gather_entries("theorems", ignore=["CLOSED-ikm121"], settings=verify_settings)
    assert "CLOSED-ikm121" not in {entry.id for entry in ignored}


def test_tolerance_classes(ctx: PrecisionContext):
    mp = ctx.mp
    assert tolerance_for("full", ctx) == mp.mpf(10) ** -10
    assert tolerance_for("oscillatory", ctx) == mp.mpf(10) ** -25
    assert tolerance_for("fd_degraded", ctx) == mp.mpf(10) ** -5
    assert tolerance_for("experimental", ctx) is None


@pytest.mark.parametrize("id", ["CLOSED-ikm121", "T1b-integrality", "K1-S1-2^1", "K1-S1-3^2"])
def test_passing_checks(ctx: PrecisionContext, id: str):
    result = run_check(id, ctx, settings=verify_settings)
    assert result.status == "pass", result.message
    assert result.agreement is None


def test_exact_check_values(ctx: PrecisionContext):
    result = run_check("K1-S1-5^1", ctx, settings=verify_settings)
    assert result.lhs == "-1"
    assert result.rel_err == "0"


def test_failing_check(ctx: PrecisionContext):
    entry = IdentityEntry(
        "X-wrong",
        "theorem",
        "moments",
        value("ikm", a=0, b=1, n=1),
        constant("2", lambda ctx: 2),
        "full",
        "int K0 t dt = 2",
    )
    result = run_check(entry, ctx, settings=verify_settings)
    assert result.status == "fail"
    assert result.message == ""


def test_errors_are_captured(ctx: PrecisionContext):
    entry = IdentityEntry(
        "X-divergent", "cross_check", "moments", value("ikm", a=2, b=1, n=1), ZERO, "full", "divergent moment"
    )
    result = run_check(entry, ctx, settings=verify_settings)
    assert result.status == "fail"
    assert result.message.startswith("DivergenceError: ")


def test_cache_round_trip(ctx: PrecisionContext, result_cache: ResultCache):
    key = "v1:test:x=1:d20"
    assert result_cache.get(key, ctx) is None
    result_cache.put(key, ctx.mp.pi, ctx)
    assert result_cache.get(key, ctx) == ctx.mp.pi
    result_cache.put("v1:test:x=2:d20", Fraction(-3, 7), ctx)
    assert result_cache.get("v1:test:x=2:d20", ctx) == Fraction(-3, 7)
    result_cache.put("v1:test:x=3:d20", 12, ctx)
    assert result_cache.get("v1:test:x=3:d20", ctx) == 12
    assert result_cache.get("v1:test:x=1:d30", ctx) is None
    assert result_cache.stats()["entries"] == 3


def test_corrupted_cache_entry(ctx: PrecisionContext, result_cache: ResultCache):
    result_cache.backend.set("v1:test:x=1:d20", "not a number", timeout=None)
    assert result_cache.get("v1:test:x=1:d20", ctx) is None


def test_read_only_cache(ctx: PrecisionContext, result_cache: ResultCache):
    worker_cache = ResultCache(read_only=True)
    worker_cache.put("v1:test:x=1:d20", 5, ctx)
    assert worker_cache.get("v1:test:x=1:d20", ctx) == 5
    assert result_cache.get("v1:test:x=1:d20", ctx) is None
    result_cache.write_pending(worker_cache.pending)
    assert result_cache.get("v1:test:x=1:d20", ctx) == 5


def test_checks_fill_the_cache(ctx: PrecisionContext, result_cache: ResultCache):
    run_check("CLOSED-ikm121", ctx, result_cache, verify_settings)
    assert result_cache.get("v1:ikm:a=1,b=2,n=1:d20", ctx) is not None
    assert run_check("CLOSED-ikm121", ctx, result_cache, verify_settings).status == "pass"


def test_suite_report_exit_code():
    passing = SuiteReport("theorems", 20, [_result("A"), _result("B", kind="cross_check", status="fail")])
    assert passing.summary == {"pass": 1, "fail": 1, "experimental": 0}
    assert passing.exit_code == 0
    failing = SuiteReport("theorems", 20, [_result("A", status="fail")])
    assert [result.id for result in failing.theorem_failures] == ["A"]
    assert failing.exit_code == 1


def test_empty_suite(ctx: PrecisionContext):
    report = run_suite("theorems", ctx, settings=verify_settings, include=["not-an-id"])
    assert report.results == []
    assert report.exit_code == 0


def _untimed(report: SuiteReport) -> list[CheckResult]:
    return [dataclasses.replace(result, wall_time=0.0) for result in report.results]


def test_suite_is_deterministic(ctx: PrecisionContext, result_cache: ResultCache):
    run_suite("all", ctx, cache=result_cache, settings=verify_settings, include=CHEAP_CHECKS)
    first = run_suite("all", ctx, cache=result_cache, settings=verify_settings, include=CHEAP_CHECKS)
    second = run_suite("all", ctx, cache=result_cache, settings=verify_settings, include=CHEAP_CHECKS)
    assert sorted(result.id for result in first.results) == sorted(CHEAP_CHECKS)
    assert _untimed(first) == _untimed(second)
    assert emit_report(dataclasses.replace(first, results=_untimed(first)), "json") == emit_report(
        dataclasses.replace(second, results=_untimed(second)), "json"
    )


def test_cold_and_warm_cache_agree(ctx: PrecisionContext, result_cache: ResultCache):
    uncached = run_suite("all", ctx, settings=verify_settings, include=CHEAP_CHECKS)
    cold = run_suite("all", ctx, cache=result_cache, settings=verify_settings, include=CHEAP_CHECKS)
    assert result_cache.stats()["entries"] > 0
    warm = run_suite("all", ctx, cache=result_cache, settings=verify_settings, include=CHEAP_CHECKS)
    assert _untimed(uncached) == _untimed(cold) == _untimed(warm)
    assert all(result.status == "pass" for result in warm.results)


@pytest.mark.parametrize("id", CHEAP_CHECKS)
def test_passing_at_fewer_digits(id: str):
    for digits in (50, 30):
        result = run_check(id, PrecisionContext(digits), settings=verify_settings)
        assert result.status == "pass", (digits, result.message)


def test_parallel_suite(ctx: PrecisionContext, result_cache: ResultCache):
    sequential = run_suite("all", ctx, settings=verify_settings, include=CHEAP_CHECKS)
    parallel = run_suite("all", ctx, jobs=2, cache=result_cache, settings=verify_settings, include=CHEAP_CHECKS)
    assert _untimed(parallel) == _untimed(sequential)
    # workers only read; their values reach the cache through the calling process
    assert result_cache.get("v1:ikm:a=1,b=2,n=1:d20", ctx) is not None
    warm = run_suite("all", ctx, jobs=2, cache=result_cache, settings=verify_settings, include=CHEAP_CHECKS)
    assert _untimed(warm) == _untimed(sequential)


def test_json_report():
    report = SuiteReport("all", 20, [_result("A"), _result("B", kind="conjecture", status="experimental")])
    data = json.loads(emit_report(report, "json"))
    assert data["suite"] == "all"
    assert data["digits"] == 20
    assert data["summary"] == {"pass": 1, "fail": 0, "experimental": 1}
    assert data["results"][0]["wall_time_ms"] == 12
    assert set(data["results"][0]) == {
        "id",
        "status",
        "lhs",
        "rhs",
        "rel_err",
        "tolerance",
        "reference",
        "wall_time_ms",
    }


def test_csv_report():
    report = SuiteReport("all", 20, [_result("A"), _result("B")])
    rows = list(csv.DictReader(io.StringIO(emit_report(report, "csv"))))
    assert [row["id"] for row in rows] == ["A", "B"]
    assert rows[0]["status"] == "pass"


def test_text_report():
    result = CheckResult(
        id="CONJ",
        kind="conjecture",
        status="experimental",
        lhs="1.2",
        rhs="1.2",
        abs_err="",
        rel_err="1.0E-12",
        tolerance="",
        reference="",
        wall_time=1.0,
        agreement=12,
    )
    text = emit_report(SuiteReport("conjectures", 20, [result]), "text")
    assert "matched 12 significant digits" in text
    assert text.endswith("0 passed, 0 failed, 1 experimental\n")
    with pytest.raises(ValueError):
        emit_report(SuiteReport("all", 20, []), "xml")  # type: ignore[arg-type]
