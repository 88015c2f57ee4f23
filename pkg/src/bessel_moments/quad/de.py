"""Double-exponential quadrature on `(0, oo)` for integrands with at worst logarithmic endpoint singularities."""

from __future__ import annotations

import logging

from ..exceptions import DivergenceError, DomainError, NonConvergenceError
from ..mpcore import MPReal, PrecisionContext
from .integrand import IntegrandSpec

logger = logging.getLogger(__name__)


def tail_cutoff(rate: MPReal, ctx: PrecisionContext) -> MPReal:
    """Abscissa past which `exp(-rate t)` is negligible at the working precision."""
    mp = ctx.mp
    return (ctx.working_digits + 10) * mp.ln10 / rate * mp.mpf("1.2") + 10


def _doubling_edges(lower: MPReal, upper: MPReal, ctx: PrecisionContext) -> list[MPReal]:
    points = [lower]
    edge = ctx.mp.mpf(1)
    while edge < upper:
        if edge > lower:
            points.append(edge)
        edge *= 2
    points.append(upper)
    return points


def breakpoints(spec: IntegrandSpec, ctx: PrecisionContext) -> list[MPReal]:
    """Interval endpoints handed to the tanh-sinh rule.

    Exponentially decaying integrands are cut at `tail_cutoff` and split at `1, 2, 4, ...` so that
    the nodes (and the cached Bessel values at them) are shared between integrands. Algebraic tails
    keep an infinite last interval, which `mpmath` maps onto a finite one.
    """
    mp = ctx.mp
    lower = ctx.mpf(spec.lower)
    if spec.decay == "finite":
        return _doubling_edges(lower, ctx.mpf(spec.upper), ctx)
    if spec.decay == "algebraic":
        return [lower, mp.mpf(1), mp.inf] if lower < 1 else [lower, mp.inf]
    return _doubling_edges(lower, max(tail_cutoff(ctx.mpf(spec.rate), ctx), lower + 1), ctx)


def integrate_de(spec: IntegrandSpec, ctx: PrecisionContext) -> MPReal:
    """Integrate `spec` over `[lower, upper)` with tanh-sinh quadrature.

    The number of levels is raised until two successive levels agree; if the relative error estimate is
    still above `10**-(digits+5)` at `QUADRATURE.MAX_DEGREE`, `NonConvergenceError` is raised.
    """
    mp = ctx.mp
    if spec.decay == "oscillatory":
        raise DomainError("Oscillatory integrands must be integrated with `integrate_oscillatory`.")
    if spec.decay == "exponential" and spec.rate <= 0:
        raise DivergenceError(f"Exponential decay needs a positive rate, got {spec.rate}.")
    if spec.decay == "algebraic" and spec.rate >= -1:
        raise DivergenceError(f"Algebraic decay t^{spec.rate} is not integrable at infinity.")
    if ctx.quadrature.DEBUG_DECAY_SAMPLING:
        spec.check_decay(ctx)

    points = breakpoints(spec, ctx)
    value, error = mp.quad(
        spec.evaluator, points, method="tanh-sinh", maxdegree=ctx.quadrature.MAX_DEGREE, error=True
    )
    tolerance = max(mp.mpf(10) ** (-(ctx.digits + 5)) * abs(value), 10 * mp.eps)
    logger.debug(
        "tanh-sinh over %d intervals: value %s, error estimate %s",
        len(points) - 1,
        mp.nstr(value, 10),
        mp.nstr(error, 3),
    )
    if error > tolerance:
        raise NonConvergenceError(
            f"Quadrature error estimate {mp.nstr(error, 3)} above {mp.nstr(tolerance, 3)} "
            f"at degree {ctx.quadrature.MAX_DEGREE}."
        )
    return value
