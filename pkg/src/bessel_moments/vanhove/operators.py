from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Optional

import sympy

from ..exceptions import UnsupportedOrderError
from ..mpcore import Estimate, MPReal, Number, PrecisionContext
from ..quad import DerivativeChain, differentiate_param
from ..typing import DifferentiationModeT

logger = logging.getLogger(__name__)

Polynomial = tuple[int, ...]
"""Integer coefficients, constant term first."""

VANHOVE_TABLE: dict[int, tuple[Polynomial, ...]] = {
    1: ((-2, 1), (0, -4, 1)),
    2: ((-3, 1), (9, -20, 3), (0, 9, -10, 1)),
    3: ((-4, 1), (64, -68, 7), (0, 192, -90, 6), (0, 0, 64, -20, 1)),
    4: ((-5, 1), (285, -196, 15), (-450, 1839, -518, 25), (0, -900, 1554, -280, 10), (0, 0, -225, 259, -35, 1)),
}
"""Coefficients of `D**0, ..., D**n` in the operators annihilating `int I0(sqrt(u) t) K0(t)**(n+1) t dt` up to a
constant."""

_u = sympy.Symbol("u")


@dataclass(frozen=True)
class DiffOperator:
    """`sum_j coeff_polys[j](u) D**j` with `D = d/du`."""

    coeff_polys: tuple[Polynomial, ...]

    @property
    def order(self) -> int:
        return len(self.coeff_polys) - 1

    def coefficient(self, j: int, u: Number, ctx: PrecisionContext) -> MPReal:
        return ctx.mp.polyval(list(reversed(self.coeff_polys[j])), ctx.mpf(u))

    def as_sympy(self, j: int) -> sympy.Poly:
        return sympy.Poly(list(reversed(self.coeff_polys[j])), _u)


def vanhove_operator(n: int) -> DiffOperator:
    if n not in VANHOVE_TABLE:
        raise UnsupportedOrderError(f"Vanhove operators are tabulated for n = 1..4, got {n}.")
    return DiffOperator(VANHOVE_TABLE[n])


def leading_polynomial(n: int) -> sympy.Poly:
    """`u**k prod_{j<=k} (u - (2j)**2)` for `n = 2k - 1`, `u**k prod_{j<=k+1} (u - (2j-1)**2)` for `n = 2k`."""
    if n < 1:
        raise UnsupportedOrderError(f"Operator order must be positive, got {n}.")
    k = (n + 1) // 2
    if n % 2:
        roots = [(2 * j) ** 2 for j in range(1, k + 1)]
    else:
        roots = [(2 * j - 1) ** 2 for j in range(1, k + 2)]
    return sympy.Poly(_u**k * sympy.prod([_u - r for r in roots]), _u)


def second_coefficient_matches(n: int) -> bool:
    """Whether the `D**(n-1)` coefficient of the tabulated operator is `c * d/du` of its leading coefficient.

    `c` is `(2k-1)/2` for `n = 2k - 1` and `k` for `n = 2k`; `n = 1` has no such relation.
    """
    operator = vanhove_operator(n)
    if n < 2:
        raise UnsupportedOrderError("The second coefficient relation starts at n = 2.")
    leading = leading_polynomial(n)
    if leading != operator.as_sympy(n):
        return False
    k = (n + 1) // 2
    factor = sympy.Rational(2 * k - 1, 2) if n % 2 else sympy.Integer(k)
    return sympy.Poly(factor * leading.diff(_u), _u) == operator.as_sympy(n - 1)


def apply_operator(
    operator: DiffOperator,
    F: Callable[[MPReal], MPReal],
    u0: Number,
    mode: DifferentiationModeT,
    ctx: PrecisionContext,
    derivative: Optional[DerivativeChain] = None,
) -> Estimate:
    """`sum_j coeff_polys[j](u0) D**j F(u0)`.

    In `analytic` mode, orders above `QUADRATURE.ANALYTIC_MAX_ORDER` still fall back to finite differences.
    """
    mp = ctx.mp
    u0 = ctx.mpf(u0)
    value = operator.coefficient(0, u0, ctx) * F(u0)
    error = abs(value) * ctx.tolerance
    for j in range(1, operator.order + 1):
        j_mode: DifferentiationModeT = mode
        if mode == "analytic" and j > ctx.quadrature.ANALYTIC_MAX_ORDER:
            j_mode = "finite_difference"
        estimate = differentiate_param(F, u0, j, j_mode, ctx, derivative=derivative)
        coefficient = operator.coefficient(j, u0, ctx)
        value += coefficient * estimate.value
        error += abs(coefficient) * estimate.error
    logger.debug(
        "Operator of order %d at u=%s: %s (error %s)", operator.order, u0, mp.nstr(value, 12), mp.nstr(error, 3)
    )
    return Estimate(value, error)

