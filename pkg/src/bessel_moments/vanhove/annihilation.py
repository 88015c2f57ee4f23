from __future__ import annotations

import logging
from fractions import Fraction

from ..mpcore import Estimate, MPReal, Number, PrecisionContext
from ..typing import DifferentiationModeT
from .families import KernelIntegral, annihilated_integrals, constant_image_integral
from .operators import apply_operator, vanhove_operator

logger = logging.getLogger(__name__)

U_GRID = (Fraction(1, 5), Fraction(2, 5), Fraction(3, 5), Fraction(4, 5))


def apply_to_integral(
    n: int, integral: KernelIntegral, u: Number, ctx: PrecisionContext, mode: DifferentiationModeT = "analytic"
) -> Estimate:
    return apply_operator(
        vanhove_operator(n),
        lambda v: integral.value(v, ctx),
        u,
        mode,
        ctx,
        derivative=integral.derivative_chain(ctx),
    )


def annihilation_residual(
    n: int, index: int, u: Number, ctx: PrecisionContext, mode: DifferentiationModeT = "analytic"
) -> Estimate:
    """The order `n` Vanhove operator applied to the `index`-th integral of `annihilated_integrals(n)`."""
    integral = annihilated_integrals(n)[index]
    estimate = apply_to_integral(n, integral, u, ctx, mode)
    logger.debug("Annihilation residual n=%d, #%d at u=%s: %s", n, index, u, ctx.mp.nstr(estimate.value, 5))
    return estimate


def constancy_values(n: int, ctx: PrecisionContext, mode: DifferentiationModeT = "analytic") -> list[Estimate]:
    integral = constant_image_integral(n)
    return [apply_to_integral(n, integral, u, ctx, mode) for u in U_GRID]


def constancy_spread(n: int, ctx: PrecisionContext, mode: DifferentiationModeT = "analytic") -> tuple[MPReal, MPReal]:
    """Spread `max - min` of the operator image over `U_GRID`, and the largest error estimate among the points."""
    values = constancy_values(n, ctx, mode)
    spread = max(v.value for v in values) - min(v.value for v in values)
    logger.info("Constancy of order %d: spread %s over %d points", n, ctx.mp.nstr(spread, 5), len(values))
    return spread, max(v.error for v in values)
