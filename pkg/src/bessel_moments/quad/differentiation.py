from __future__ import annotations

import logging
from math import comb
from typing import Callable, Optional

from ..exceptions import StepUnderflowError, UnsupportedOrderError
from ..mpcore import Estimate, MPReal, Number, PrecisionContext
from ..typing import DifferentiationModeT

logger = logging.getLogger(__name__)

ParametricFunction = Callable[[MPReal], MPReal]
DerivativeChain = Callable[[MPReal, int], MPReal]
"""`(u, order) -> d^order F / du^order`, typically built by differentiating under the integral sign."""


def default_step(order: int, ctx: PrecisionContext) -> MPReal:
    return ctx.mp.mpf(10) ** (-ctx.digits / (order + 2))


def _central_difference(F: ParametricFunction, u0: MPReal, order: int, h: MPReal) -> MPReal:
    # sum_k (-1)^k C(n, k) F(u0 + (n/2 - k) h) / h^n
    total = 0
    for k in range(order + 1):
        total += (-1) ** k * comb(order, k) * F(u0 + (order / 2 - k) * h)
    return total / h**order


def differentiate_param(
    F: ParametricFunction,
    u0: Number,
    order: int,
    mode: DifferentiationModeT,
    ctx: PrecisionContext,
    derivative: Optional[DerivativeChain] = None,
    step: Optional[Number] = None,
) -> Estimate:
    """The derivative `d^order F/du^order` at `u0`.

    In `analytic` mode, `derivative` provides the derivative directly and the error is the working
    tolerance. In `finite_difference` mode, a central stencil with step `h = 10**-(digits/(order+2))`
    is evaluated at `h` and `h/2` and combined by one Richardson step; the difference between the two
    levels is reported as the error.
    """
    mp = ctx.mp
    if not 1 <= order <= 4:
        raise UnsupportedOrderError(f"Derivatives of order {order} are not supported (1 to 4).")
    u0 = ctx.mpf(u0)
    if mode == "analytic":
        if derivative is None:
            raise ValueError("Analytic differentiation needs the derivative chain of the integrand.")
        value = derivative(u0, order)
        return Estimate(value, abs(value) * ctx.tolerance)

    h = ctx.mpf(step) if step is not None else default_step(order, ctx)
    if h / 2 <= mp.eps * max(abs(u0), 1):
        raise StepUnderflowError(
            f"Step {mp.nstr(h, 3)} is below the resolution of {ctx.working_digits} working digits."
        )
    coarse = _central_difference(F, u0, order, h)
    fine = _central_difference(F, u0, order, h / 2)
    value = (4 * fine - coarse) / 3
    error = abs(value - fine)
    logger.debug(
        "Order %d difference at u=%s: %s (error %s)", order, mp.nstr(u0, 6), mp.nstr(value, 12), mp.nstr(error, 3)
    )
    return Estimate(value, error)
