from __future__ import annotations

import logging
import time
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Any, Optional, Union

from ..app_settings import VerifySettings
from ..exceptions import PrecisionError
from ..mpcore import MPReal, PrecisionContext, digits_of_agreement
from ..typing import IdentityKindT, StatusT, ToleranceClassT
from .cache import SCHEMA_VERSION, ResultCache
from .catalog import Expression, IdentityEntry, get_entry
from .operations import Value, evaluate_operation, get_operation

logger = logging.getLogger(__name__)

MARGINAL_FACTOR = 1000
"""A failure within this factor of the tolerance is recomputed once with doubled guard digits."""


@dataclass(frozen=True)
class CheckResult:
    id: str
    kind: IdentityKindT
    status: StatusT
    lhs: str
    rhs: str
    abs_err: str
    rel_err: str
    tolerance: str
    reference: str
    wall_time: float
    """Seconds."""

    agreement: Optional[int] = None
    """Significant digits shared by both sides, reported for conjectures."""

    message: str = ""

    @property
    def wall_time_ms(self) -> int:
        return round(self.wall_time * 1000)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def tolerance_for(tolerance_class: ToleranceClassT, ctx: PrecisionContext) -> Optional[MPReal]:
    """The tolerance of a class at the precision of `ctx`; `None` for report-only entries."""
    ten = ctx.mp.mpf(10)
    if tolerance_class == "full":
        return ten ** (-(ctx.digits - 10))
    if tolerance_class == "oscillatory":
        return ten ** (-25)
    if tolerance_class == "fd_degraded":
        return ten ** (-(ctx.digits // 2 - 5))
    return None


def _coerce(value: Any, ctx: PrecisionContext) -> Value:
    if isinstance(value, (int, Fraction)):
        return value
    if hasattr(value, "_mpc_"):
        return ctx.mp.mpc(value)
    return ctx.mp.mpf(value)


def _operation_context(name: str, ctx: PrecisionContext, settings: VerifySettings) -> PrecisionContext:
    if get_operation(name).oscillatory and ctx.digits > settings.JYM_DIGITS:
        return ctx.with_digits(settings.JYM_DIGITS)
    return ctx


def evaluate_expression(
    expression: Expression,
    ctx: PrecisionContext,
    settings: VerifySettings,
    cache: Optional[ResultCache] = None,
) -> Value:
    values = []
    for operand in expression.operands:
        octx = _operation_context(operand.op, ctx, settings)
        key = operand.key(octx.digits, SCHEMA_VERSION)
        value = cache.get(key, octx) if cache is not None else None
        if value is None:
            value = evaluate_operation(operand.op, operand.kwargs, octx, settings)
            if cache is not None:
                cache.put(key, value, octx)
        else:
            logger.debug("Cache hit for %s", key)
        values.append(_coerce(value, ctx))
    return _coerce(expression.combine(ctx, *values), ctx)


Difference = Union[MPReal, Fraction]


def _difference(lhs: Value, rhs: Value, ctx: PrecisionContext) -> tuple[Difference, Difference]:
    """Absolute and relative difference of both sides, exact when both sides are."""
    if isinstance(lhs, (int, Fraction)) and isinstance(rhs, (int, Fraction)):
        abs_err = abs(Fraction(lhs) - Fraction(rhs))
        return abs_err, abs_err / abs(Fraction(rhs)) if rhs != 0 else abs_err
    abs_err = abs(ctx.mpf(lhs) - ctx.mpf(rhs))
    return abs_err, abs_err / abs(ctx.mpf(rhs)) if rhs != 0 else abs_err


class _MarginalFailure(Exception):
    pass


def _evaluate(
    entry: IdentityEntry,
    ctx: PrecisionContext,
    settings: VerifySettings,
    cache: Optional[ResultCache],
    started: float,
    retry_marginal: bool = True,
) -> CheckResult:
    lhs = evaluate_expression(entry.lhs, ctx, settings, cache)
    rhs = evaluate_expression(entry.rhs, ctx, settings, cache)
    abs_err, rel_err = _difference(lhs, rhs, ctx)
    measured = abs_err if abs(rhs) < 1 else rel_err
    tolerance = tolerance_for(entry.tolerance_class, ctx)

    message = ""
    agreement = digits_of_agreement(lhs, rhs, ctx) if entry.kind == "conjecture" else None
    status: StatusT
    if tolerance is None:
        status = "experimental"
        if entry.uncertainty is not None:
            uncertainty = abs(ctx.mpf(evaluate_expression(entry.uncertainty, ctx, settings, cache)))
            bracketed = ctx.mpf(abs_err) <= uncertainty
            message = (
                f"estimate {'within' if bracketed else 'outside'} its reported uncertainty {ctx.render(uncertainty)}"
            )
    else:
        status = "pass" if ctx.mpf(measured) <= tolerance else "fail"
        if status == "fail" and ctx.mpf(measured) <= MARGINAL_FACTOR * tolerance:
            if retry_marginal:
                raise _MarginalFailure()
            message = "still failing with doubled guard digits"

    return CheckResult(
        id=entry.id,
        kind=entry.kind,
        status=status,
        lhs=ctx.render(lhs),
        rhs=ctx.render(rhs),
        abs_err=ctx.with_digits(10).render(abs_err),
        rel_err=ctx.with_digits(10).render(rel_err),
        tolerance=ctx.with_digits(10).render(tolerance) if tolerance is not None else "",
        reference=entry.reference,
        wall_time=time.perf_counter() - started,
        agreement=agreement,
        message=message,
    )


def run_check(
    entry: IdentityEntry | str,
    ctx: PrecisionContext,
    cache: Optional[ResultCache] = None,
    settings: Optional[VerifySettings] = None,
) -> CheckResult:
    """Evaluate both sides of a catalog entry and compare them with the tolerance of its class.

    A check failing by a factor of at most `MARGINAL_FACTOR`, or raising a precision error, is recomputed
    once with doubled guard digits, bypassing the cache. Any other error is captured in a failing result.
    """
    settings = settings or VerifySettings()
    if isinstance(entry, str):
        entry = get_entry(entry, settings)

    started = time.perf_counter()
    try:
        try:
            result = _evaluate(entry, ctx, settings, cache, started)
        except (PrecisionError, _MarginalFailure) as e:
            logger.debug("Recomputing %s with doubled guard digits (%s)", entry.id, type(e).__name__)
            result = _evaluate(entry, ctx.doubled(), settings, None, started, retry_marginal=False)
    except Exception as e:
        logger.warning("Check %s raised %s: %s", entry.id, type(e).__name__, e)
        return CheckResult(
            id=entry.id,
            kind=entry.kind,
            status="fail",
            lhs="",
            rhs="",
            abs_err="",
            rel_err="",
            tolerance="",
            reference=entry.reference,
            wall_time=time.perf_counter() - started,
            message=f"{type(e).__name__}: {e}",
        )

    logger.info("%s %s (rel_err=%s, tolerance=%s)", entry.id, result.status, result.rel_err, result.tolerance)
    return result

