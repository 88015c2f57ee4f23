"""The Dedekind eta function and its quotients, as exact q-series and as values on the upper half-plane."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from ..exceptions import DomainError, InsufficientDecayError
from ..mpcore import MPComplex, PrecisionContext, RationalSeries

logger = logging.getLogger(__name__)

MAX_Q_ORDER = 20_000
"""Largest power of `q` a pointwise evaluation may need."""


def _pentagonal_terms() -> Iterator[tuple[int, int]]:
    """`(exponent, sign)` of `prod (1 - q**n) = sum_n (-1)**n q**(n(3n-1)/2)`, in increasing exponent order."""
    yield 0, 1
    n = 1
    while True:
        sign = (-1) ** n
        yield n * (3 * n - 1) // 2, sign
        yield n * (3 * n + 1) // 2, sign
        n += 1


@lru_cache(maxsize=None)
def eta_qexp(M: int) -> RationalSeries:
    """`prod_{n>=1} (1 - q**n)` through `q**M`; the `q**(1/24)` prefactor is left out."""
    if M < 0:
        raise ValueError(f"The order must be non-negative, got {M}.")
    coeffs = [0] * (M + 1)
    for exponent, sign in _pentagonal_terms():
        if exponent > M:
            break
        coeffs[exponent] = sign
    return RationalSeries.from_coefficients(coeffs)


def q_order(z: MPComplex, ctx: PrecisionContext) -> int:
    """Number of powers of `q = exp(2 pi i z)` needed for the working precision."""
    mp = ctx.mp
    imag = mp.im(z)
    if imag <= 0:
        raise DomainError(f"Points must lie in the upper half-plane, got {z}.")
    order = math.ceil((ctx.working_digits + 10) * mp.ln10 / (2 * mp.pi * imag))
    if order > MAX_Q_ORDER:
        raise InsufficientDecayError(
            f"Im z = {mp.nstr(imag, 5)} needs {order} powers of q, more than the cap of {MAX_Q_ORDER}."
        )
    return order


def eta(z: MPComplex, ctx: PrecisionContext) -> MPComplex:
    """`eta(z) = exp(pi i z/12) prod (1 - q**n)`, summed along the pentagonal exponents."""
    mp = ctx.mp
    z = mp.mpc(z)
    order = q_order(z, ctx)
    q = mp.expjpi(2 * z)
    total = mp.mpc(0)
    for exponent, sign in _pentagonal_terms():
        if exponent > order:
            break
        total += sign * q**exponent
    return mp.expjpi(z / 12) * total


def eta_transformation_residual(z: MPComplex, ctx: PrecisionContext) -> MPComplex:
    """`eta(-1/z) - sqrt(z/i) eta(z)`, which vanishes."""
    mp = ctx.mp
    z = mp.mpc(z)
    return eta(-1 / z, ctx) - mp.sqrt(z / mp.j) * eta(z, ctx)


@dataclass(frozen=True)
class EtaQuotient:
    """`prod eta(m z)**e` over `factors = ((m, e), ...)`."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if any(m < 1 for m, _ in self.factors):
            raise ValueError(f"Eta multipliers must be positive, got {self.factors}.")

    @property
    def leading_exponent(self) -> Fraction:
        """`sum m e / 24`, the power of `q` in front of the product."""
        return Fraction(sum(m * e for m, e in self.factors), 24)

    @property
    def weight(self) -> Fraction:
        return Fraction(sum(e for _, e in self.factors), 2)

    def series(self, M: int) -> RationalSeries:
        """The q-expansion with `M` coefficients past the leading exponent."""
        result = RationalSeries.one(M)
        for m, e in self.factors:
            result = result * eta_qexp(M - 1).stretch(m).truncate(M) ** e
        return result.shift(self.leading_exponent)

    def evaluate(self, z: MPComplex, ctx: PrecisionContext) -> MPComplex:
        mp = ctx.mp
        z = mp.mpc(z)
        value = mp.mpc(1)
        for m, e in self.factors:
            value *= eta(m * z, ctx) ** e
        return value

    def __str__(self) -> str:
        return " ".join(f"eta({m}z)^{e}" for m, e in self.factors)
