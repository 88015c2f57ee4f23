from __future__ import annotations

import logging
from fractions import Fraction
from typing import Callable, Sequence

from ..exceptions import UnsupportedOrderError
from ..moments import det_m_closed, det_n_closed
from ..mpcore import Estimate, MPReal, Number, PrecisionContext, gamma_real
from ..quad import differentiate_param
from ..typing import DifferentiationModeT, FamilyKindT
from .families import KernelIntegral, family_members

logger = logging.getLogger(__name__)

Column = Callable[[MPReal, int], Estimate]
"""`(u, order) -> d^order f/du^order` for one function of the Wronskian."""


def _sign(k: int) -> int:
    return (-1) ** ((k - 1) * (k - 2) // 2)


def integral_column(integral: KernelIntegral, mode: DifferentiationModeT, ctx: PrecisionContext) -> Column:
    """Derivatives of `integral` in `u`, analytic up to `QUADRATURE.ANALYTIC_MAX_ORDER` when `mode` allows."""
    chain = integral.derivative_chain(ctx)

    def column(u: MPReal, order: int) -> Estimate:
        if order == 0:
            value = integral.value(u, ctx)
            return Estimate(value, abs(value) * ctx.tolerance)
        order_mode: DifferentiationModeT = mode
        if mode == "analytic" and order > ctx.quadrature.ANALYTIC_MAX_ORDER:
            order_mode = "finite_difference"
        return differentiate_param(lambda v: integral.value(v, ctx), u, order, order_mode, ctx, derivative=chain)

    return column


def determinant(values: list[list[MPReal]], errors: list[list[MPReal]], ctx: PrecisionContext) -> Estimate:
    """Determinant with the first-order error `sum |cofactor_ij| error_ij`."""
    mp = ctx.mp
    matrix = mp.matrix(values)
    value = mp.det(matrix)
    size = len(values)
    if value == 0:
        return Estimate(value, mp.fsum(abs(e) for row in errors for e in row))
    inverse = mp.inverse(matrix)
    error = mp.fsum(abs(value * inverse[j, i]) * errors[i][j] for i in range(size) for j in range(size))
    return Estimate(value, error)


def wronskian_from_columns(
    columns: Sequence[Column], u: Number, ctx: PrecisionContext, last_order: int | None = None
) -> Estimate:
    """`det [f_j^(i)(u)]` for `i = 0..N-1`; `last_order` replaces the order of the last row."""
    u = ctx.mpf(u)
    size = len(columns)
    orders = list(range(size))
    if last_order is not None:
        orders[-1] = last_order
    entries = [[column(u, order) for column in columns] for order in orders]
    return determinant([[e.value for e in row] for row in entries], [[e.error for e in row] for row in entries], ctx)


def _family_columns(kind: FamilyKindT, k: int, mode: DifferentiationModeT, ctx: PrecisionContext) -> list[Column]:
    if k < 2:
        raise UnsupportedOrderError(f"Wronskians are built for k >= 2, got {k}.")
    return [integral_column(member.integral, mode, ctx) for member in family_members(kind, k)]


def wronskian_numeric(
    k: int,
    u: Number,
    ctx: PrecisionContext,
    kind: FamilyKindT = "mu",
    mode: DifferentiationModeT = "analytic",
) -> Estimate:
    """`Omega_{2k-1}(u) = W[mu_{k,1}, ..., mu_{k,2k-1}]` or `omega_{2k}(u) = W[nu_{k,1}, ..., nu_{k,2k}]`."""
    estimate = wronskian_from_columns(_family_columns(kind, k, mode, ctx), u, ctx)
    logger.info(
        "Wronskian of %s (k=%d, %s) at u=%s: %s (error %s)",
        kind,
        k,
        mode,
        u,
        ctx.mp.nstr(estimate.value, 15),
        ctx.mp.nstr(estimate.error, 3),
    )
    return estimate


def wronskian_closed(k: int, u: Number, ctx: PrecisionContext) -> MPReal:
    """`Omega_{2k-1}(u)` in closed form::

        (-1)**((k-1)(k-2)/2) k Gamma(k/2)**2 / (u**(k(2k-1)/2) (2k+1)) (det N_{k-1})**2 / 2**((k-1)(2k-1)+1)
            * prod_{j=1}^k [(2j)**2 / ((2j)**2 - u)]**(k - 1/2)
    """
    if k < 2:
        raise UnsupportedOrderError(f"Wronskians are built for k >= 2, got {k}.")
    mp = ctx.mp
    u = ctx.mpf(u)
    value = _sign(k) * k * gamma_real(Fraction(k, 2), ctx) ** 2 / (u ** (mp.mpf(k * (2 * k - 1)) / 2) * (2 * k + 1))
    value *= det_n_closed(k - 1, ctx) ** 2 / mp.mpf(2) ** ((k - 1) * (2 * k - 1) + 1)
    for j in range(1, k + 1):
        square = mp.mpf(2 * j) ** 2
        value *= (square / (square - u)) ** (k - mp.mpf(1) / 2)
    return value


def wronskian_at_one(k: int, ctx: PrecisionContext) -> MPReal:
    """`Omega_{2k-1}(1) = (-1)**((k-1)(k-2)/2) det M_{k-1} det M_k / 2**((k-1)(2k-1))`."""
    return _sign(k) * det_m_closed(k - 1, ctx) * det_m_closed(k, ctx) / ctx.mp.mpf(2) ** ((k - 1) * (2 * k - 1))


def evolution_rate(kind: FamilyKindT, k: int, u: Number, ctx: PrecisionContext) -> MPReal:
    """`d/du log` of the Wronskian from its first-order evolution equation.

    `mu`: `(2k-1)/2 d/du log(1 / (u**k prod_{j<=k} ((2j)**2 - u)))`;
    `nu`: `k d/du log(1 / (u**k prod_{j<=k+1} ((2j-1)**2 - u)))`.
    """
    mp = ctx.mp
    u = ctx.mpf(u)
    if kind == "mu":
        poles = mp.fsum(1 / ((2 * j) ** 2 - u) for j in range(1, k + 1))
        return -(mp.mpf(2 * k - 1) / 2) * (k / u - poles)
    poles = mp.fsum(1 / ((2 * j - 1) ** 2 - u) for j in range(1, k + 2))
    return -k * (k / u - poles)


def omega_evolution_residual(
    kind: FamilyKindT,
    k: int,
    u: Number,
    ctx: PrecisionContext,
    mode: DifferentiationModeT = "analytic",
) -> Estimate:
    """Relative residual `(W' - rate W) / (rate W)` of the evolution equation.

    `W'` is the Wronskian with its last row replaced by the `N`-th derivatives.
    """
    columns = _family_columns(kind, k, mode, ctx)
    size = len(columns)
    if size > 4:
        raise UnsupportedOrderError(f"The evolution check needs derivatives of order {size}, at most 4 are supported.")
    wronskian = wronskian_from_columns(columns, u, ctx)
    derivative = wronskian_from_columns(columns, u, ctx, last_order=size)
    expected = evolution_rate(kind, k, u, ctx) * wronskian.value
    residual = (derivative.value - expected) / expected
    error = (derivative.error + abs(expected / wronskian.value) * wronskian.error) / abs(expected)
    logger.info("Evolution residual of %s (k=%d) at u=%s: %s", kind, k, u, ctx.mp.nstr(residual, 5))
    return Estimate(residual, error)


def det_m_recurrence_residual(k: int, ctx: PrecisionContext) -> MPReal:
    """Relative residual of

    `det M_{k-1} det M_k = k Gamma(k/2)**2 (det N_{k-1})**2 / (2(2k+1)) prod_{j<=k} [(2j)**2/((2j)**2-1)]**(k-1/2)`.
    """
    mp = ctx.mp
    rhs = k * gamma_real(Fraction(k, 2), ctx) ** 2 * det_n_closed(k - 1, ctx) ** 2 / (2 * (2 * k + 1))
    for j in range(1, k + 1):
        square = mp.mpf(2 * j) ** 2
        rhs *= (square / (square - 1)) ** (k - mp.mpf(1) / 2)
    return det_m_closed(k - 1, ctx) * det_m_closed(k, ctx) / rhs - 1


def det_n_recurrence_residual(k: int, ctx: PrecisionContext) -> MPReal:
    """Relative residual of

    `det N_{k-1} det N_k = (2k+1)/(k+1) (det M_k)**2 / (k-1)! prod_{j=2}^{k+1} [(2j-1)**2/((2j-1)**2-1)]**k`.
    """
    mp = ctx.mp
    rhs = mp.mpf(2 * k + 1) / (k + 1) * det_m_closed(k, ctx) ** 2 / mp.factorial(k - 1)
    for j in range(2, k + 2):
        square = mp.mpf(2 * j - 1) ** 2
        rhs *= (square / (square - 1)) ** k
    return det_n_closed(k - 1, ctx) * det_n_closed(k, ctx) / rhs - 1
