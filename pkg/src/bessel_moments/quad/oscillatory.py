"""Integration of oscillatory Bessel tails by panels between zeros of `J0` and sequence acceleration."""

from __future__ import annotations

import logging
from functools import lru_cache

from ..exceptions import AccelerationStallError, DomainError
from ..mpcore import Estimate, MPReal, PrecisionContext
from .integrand import IntegrandSpec

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def j0_zero(k: int, ctx: PrecisionContext) -> MPReal:
    """The `k`-th positive zero of `J0`, found by a bracketing root finder around McMahon's estimate."""
    if k < 1:
        raise ValueError(f"Zeros of J0 are numbered from 1, got {k}.")
    mp = ctx.mp
    beta = (k - mp.mpf(1) / 4) * mp.pi
    eight_beta = 8 * beta
    estimate = beta + 1 / eight_beta - mp.mpf(124) / (3 * eight_beta**3)
    bracket = (estimate - mp.mpf("0.05"), estimate + mp.mpf("0.05"))
    return mp.findroot(lambda t: mp.besselj(0, t), bracket, solver="anderson")


def zero_panels(frequency: MPReal, count: int, ctx: PrecisionContext) -> list[MPReal]:
    """The first `count` zeros of `J0(frequency t)`."""
    return [j0_zero(k, ctx) / frequency for k in range(1, count + 1)]


def _averaged(partial_sums: list[MPReal]) -> tuple[MPReal, MPReal]:
    """Repeated averaging of consecutive partial sums. Suited to alternating panel sums."""
    row = list(partial_sums)
    previous = row[-1]
    while len(row) > 1:
        previous = row[-1]
        row = [(a + b) / 2 for a, b in zip(row, row[1:])]
    return row[0], abs(row[0] - previous)


def accelerate(partial_sums: list[MPReal], ctx: PrecisionContext) -> Estimate:
    """Extrapolate the limit of `partial_sums` with the configured accelerator."""
    mp = ctx.mp
    if ctx.quadrature.ACCELERATOR == "averaging":
        value, error = _averaged(partial_sums)
        return Estimate(value, error)
    with mp.extraprec(mp.prec):
        levin = mp.levin(method="levin", variant="u")
        value, error = levin.update_psum(partial_sums)
    return Estimate(+value, +error)


def integrate_oscillatory(
    spec: IntegrandSpec, ctx: PrecisionContext, split_points: list[MPReal] | None = None
) -> Estimate:
    """Integrate an integrand with an oscillatory tail over `(0, oo)`.

    The head up to the first split point is integrated with tanh-sinh. Beyond it, panels between
    consecutive split points (by default the zeros of `J0(frequency t)`) are integrated and summed, and the
    sequence of partial sums is accelerated. The number of panels starts at `QUADRATURE.PANELS_START` and
    doubles until two accelerated estimates agree to `10**-digits`.

    Returns the value together with the acceleration error estimate.
    """
    mp = ctx.mp
    settings = ctx.quadrature
    if spec.decay != "oscillatory":
        raise DomainError(f"Expected an oscillatory integrand, got {spec.decay} decay.")
    frequency = ctx.mpf(spec.rate)

    def panel_edges(count: int) -> list[MPReal]:
        if split_points is not None:
            if len(split_points) < count + 1:
                raise AccelerationStallError(f"Only {len(split_points)} split points were provided.")
            return list(split_points[: count + 1])
        return zero_panels(frequency, count + 1, ctx)

    edges = panel_edges(settings.PANELS_START)
    head = mp.quad(spec.evaluator, [0, edges[0]], maxdegree=settings.MAX_DEGREE)
    partial_sums = [head]
    tolerance = ctx.tolerance

    count = settings.PANELS_START
    previous: Estimate | None = None
    previous_gap: MPReal | None = None
    stalls = 0
    window = max(40, ctx.digits + 10)
    while True:
        for a, b in zip(edges[len(partial_sums) - 1 : count], edges[len(partial_sums) : count + 1]):
            partial_sums.append(partial_sums[-1] + mp.quad(spec.evaluator, [a, b], maxdegree=settings.MAX_DEGREE))
        estimate = accelerate(partial_sums[-window:], ctx)
        logger.debug(
            "%d panels: accelerated estimate %s (error %s)",
            count,
            mp.nstr(estimate.value, 12),
            mp.nstr(estimate.error, 3),
        )
        if previous is not None:
            gap = abs(estimate.value - previous.value)
            scale = max(abs(estimate.value), mp.mpf(1))
            if gap <= tolerance * scale:
                return Estimate(estimate.value, max(gap, estimate.error))
            if previous_gap is not None and gap >= previous_gap:
                stalls += 1
                if stalls >= 2:
                    raise AccelerationStallError(
                        f"Accelerated estimates stopped contracting at {count} panels "
                        f"(successive gap {mp.nstr(gap, 3)})."
                    )
            previous_gap = gap
        previous = estimate
        if count >= settings.PANELS_CAP:
            raise AccelerationStallError(f"No agreement to {ctx.digits} digits within {settings.PANELS_CAP} panels.")
        count = min(2 * count, settings.PANELS_CAP)
        edges = panel_edges(count)
