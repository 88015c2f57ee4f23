from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from ..exceptions import DivergenceError, TailTruncationError
from ..mpcore import MPReal, PrecisionContext, RationalSeries, bessel, ik_product_series
from ..quad import IntegrandSpec, integrate_de, integrate_oscillatory
from ..quad.integrand import Evaluator
from ..typing import MomentKindT

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MomentRequest:
    """One Bessel moment: `kind` is `IKM` (`I0**a K0**b t**n`) or `JYM` (`J0**a Y0**b t**n`)."""

    kind: MomentKindT
    a: int
    b: int
    n: int

    def __post_init__(self) -> None:
        if min(self.a, self.b, self.n) < 0:
            raise DivergenceError(f"Moment indices must be non-negative, got {self}.")

    def __str__(self) -> str:
        return f"{self.kind}({self.a},{self.b};{self.n})"

    def evaluate(self, ctx: PrecisionContext) -> MPReal:
        if self.kind == "IKM":
            return ikm(self.a, self.b, self.n, ctx)
        return jym(self.a, self.b, self.n, ctx)


def split_point(ctx: PrecisionContext) -> int:
    """Where the quadrature head of an algebraically decaying moment hands over to its asymptotic tail."""
    return max(20, math.ceil(1.2 * ctx.working_digits))


def asymptotic_tail(series: RationalSeries, n: int, T: MPReal, ctx: PrecisionContext) -> tuple[MPReal, MPReal]:
    """`int_T^oo t**n f(t) dt` for `f` given by its asymptotic series in `1/t`.

    The series is integrated termwise and truncated before its smallest term. Returns the value and the
    magnitude of the first omitted term.
    """
    mp = ctx.mp
    total = mp.mpf(0)
    previous = mp.inf
    for exponent, coefficient in zip(series.exponents(), series.coeffs):
        if coefficient == 0:
            continue
        if n - exponent >= -1:
            raise DivergenceError(f"Asymptotic term t^{n - exponent} is not integrable at infinity.")
        power = n - exponent + 1
        term = ctx.mpf(coefficient) * T**power / (-power)
        if abs(term) > previous:
            return total, abs(term)
        total += term
        previous = abs(term)
    return total, previous


def integrate_with_tail(
    evaluator: Evaluator, series_factory: Callable[[int], RationalSeries], n: int, ctx: PrecisionContext
) -> MPReal:
    """Integrate `evaluator(t) * t**n` over `(0, oo)`, the tail past the split point from its asymptotic series.

    `series_factory(N)` must return the series of `evaluator` with about `2N` coefficients. When the
    truncated tail misses the tolerance, the split point is moved out once before `TailTruncationError`.
    """
    mp = ctx.mp
    T = mp.mpf(split_point(ctx))
    for _ in range(2):
        series = series_factory(int(T) + 10)
        head = integrate_de(IntegrandSpec.finite(lambda t: evaluator(t) * t**n, 0, T), ctx)
        tail, error = asymptotic_tail(series, n, T, ctx)
        value = head + tail
        logger.debug(
            "Split at T=%s: head %s, tail %s (error %s)", T, mp.nstr(head, 10), mp.nstr(tail, 10), mp.nstr(error, 3)
        )
        if error <= ctx.tolerance * abs(value) / 10:
            return value
        T = mp.mpf(math.ceil(T * 3 / 2))
    raise TailTruncationError(
        f"The asymptotic tail misses 10^-{ctx.digits} by a truncation error {mp.nstr(error, 3)}."
    )


def _ik_power(a: int, b: int, ctx: PrecisionContext) -> Evaluator:
    def power(t: MPReal) -> MPReal:
        value = bessel("K0", t, ctx) ** b
        if a:
            value *= bessel("I0", t, ctx) ** a
        return value

    return power


@lru_cache(maxsize=None)
def ikm(a: int, b: int, n: int, ctx: PrecisionContext) -> MPReal:
    """The Bessel moment `IKM(a, b; n) = int_0^oo I0(t)**a K0(t)**b t**n dt`.

    `b > a` moments decay exponentially and are integrated directly. For `a = b`, the integrand decays like
    `t**(n-a)`, so `n <= a - 2` is required; the tail is taken from the exact series of `(I0 K0)**a`.
    """
    if min(a, b, n) < 0 or b < a:
        raise DivergenceError(f"IKM({a},{b};{n}) diverges: K0 must appear at least as often as I0.")
    power = _ik_power(a, b, ctx)
    if b > a:
        return integrate_de(IntegrandSpec.exponential(lambda t: power(t) * t**n, b - a), ctx)
    if n > a - 2:
        raise DivergenceError(f"IKM({a},{a};{n}) diverges: the integrand decays like t^{n - a}.")
    return integrate_with_tail(power, lambda N: ik_product_series(a, N), n, ctx)


def jym_converges(alpha: int, beta: int, n: int) -> bool:
    """The integrand decays like `t**(n - (alpha+beta)/2)`; odd total powers carry no constant mode."""
    excess = (alpha + beta) / 2 - n
    return alpha + beta >= 2 and (excess > 1 or ((alpha + beta) % 2 == 1 and excess > 0))


@lru_cache(maxsize=None)
def jym(alpha: int, beta: int, n: int, ctx: PrecisionContext) -> MPReal:
    """The oscillatory moment `JYM(alpha, beta; n) = int_0^oo J0(t)**alpha Y0(t)**beta t**n dt`."""
    if min(alpha, beta, n) < 0 or not jym_converges(alpha, beta, n):
        raise DivergenceError(f"JYM({alpha},{beta};{n}) does not converge.")

    def integrand(t: MPReal) -> MPReal:
        value = t**n
        if alpha:
            value *= bessel("J0", t, ctx) ** alpha
        if beta:
            value *= bessel("Y0", t, ctx) ** beta
        return value

    estimate = integrate_oscillatory(IntegrandSpec.oscillatory(integrand, 1), ctx)
    logger.debug(
        "JYM(%d,%d;%d) = %s +- %s", alpha, beta, n, ctx.mp.nstr(estimate.value, 15), ctx.mp.nstr(estimate.error, 3)
    )
    return estimate.value

