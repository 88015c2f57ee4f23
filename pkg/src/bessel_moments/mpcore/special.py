"""Special functions at real arguments on a `PrecisionContext`.

J0 and Y0 are evaluated by `mpmath` with guard digits growing like `0.9 t` up to `BESSEL_SERIES_CUTOFF`, and
`PrecisionOverflowError` is raised when that exceeds the context cap. Above the cutoff the guard is not spent:
`mpmath` then raises its own working precision until the hypergeometric series converge to the requested
accuracy, so oscillatory integrands reaching arguments in the thousands stay accurate to `ctx.digits`.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from functools import lru_cache

from ..exceptions import DomainError, PoleError, PrecisionOverflowError
from ..typing import BesselKindT
from .context import MPReal, Number, PrecisionContext

logger = logging.getLogger(__name__)

BESSEL_SERIES_CUTOFF = 40
"""Above this argument, J0 and Y0 are left to the precision management of `mpmath`."""

K_QUADRATURE_CUTOFF = 5
"""Above this argument, K0 and K1 are computed from their defining integral."""

BESSEL_CACHE_SIZE = 2**16
"""Bessel values kept per process, across arguments, kinds and contexts."""

_SINGULAR_AT_ZERO = frozenset({"K0", "K1", "Y0"})


def gamma_real(x: Number, ctx: PrecisionContext) -> MPReal:
    """Euler's gamma function at a real argument."""
    if isinstance(x, (int, Fraction)):
        if Fraction(x).denominator == 1 and x <= 0:
            raise PoleError(f"Gamma has a pole at {x}.")
    else:
        x = ctx.mpf(x)
        if x <= 0 and ctx.mp.isint(x):
            raise PoleError(f"Gamma has a pole at {x}.")
    return ctx.mp.gamma(ctx.mpf(x))


def bessel(kind: BesselKindT, t: Number, ctx: PrecisionContext) -> MPReal:
    """Evaluate `I0`, `I1`, `K0`, `K1`, `J0` or `Y0` at a non-negative real argument."""
    t = ctx.mpf(t)
    if t < 0:
        raise DomainError(f"{kind} is only provided for t >= 0, got {t}.")
    if t == 0:
        if kind in _SINGULAR_AT_ZERO:
            raise PoleError(f"{kind} is singular at t = 0.")
        return ctx.mp.mpf(0) if kind == "I1" else ctx.mp.mpf(1)
    return _bessel_cached(kind, t, ctx)


@lru_cache(maxsize=BESSEL_CACHE_SIZE)
def _bessel_cached(kind: BesselKindT, t: MPReal, ctx: PrecisionContext) -> MPReal:
    mp = ctx.mp
    if kind == "I0":
        return mp.besseli(0, t)
    if kind == "I1":
        return mp.besseli(1, t)
    if kind in ("K0", "K1"):
        order = int(kind[1])
        if t <= K_QUADRATURE_CUTOFF:
            return mp.besselk(order, t)
        return _k_integral(order, t, ctx)
    if t > BESSEL_SERIES_CUTOFF:
        return mp.besselj(0, t) if kind == "J0" else mp.bessely(0, t)
    extra = math.ceil(0.9 * float(t))
    if extra > ctx.max_guard:
        raise PrecisionOverflowError(
            f"{kind}({mp.nstr(t, 8)}) needs {extra} guard digits, more than the cap of {ctx.max_guard}."
        )
    with mp.extradps(extra):
        value = mp.besselj(0, t) if kind == "J0" else mp.bessely(0, t)
    return mp.mpf(value)


def _k_integral(order: int, t: MPReal, ctx: PrecisionContext) -> MPReal:
    """`K_order(t) = int_0^oo exp(-t cosh u) cosh(order u) du` for `order` in {0, 1}."""
    mp = ctx.mp
    with mp.extradps(5):
        upper = mp.acosh(1 + (ctx.working_digits + 10) * mp.ln10 / t)
        if order == 0:
            value = mp.quad(lambda u: mp.exp(-t * mp.cosh(u)), [0, upper])
        else:
            value = mp.quad(lambda u: mp.exp(-t * mp.cosh(u)) * mp.cosh(u), [0, upper])
    return mp.mpf(value)


def exponential_integral(x: Number, ctx: PrecisionContext) -> MPReal:
    """`E1(x) = Gamma(0, x)` for `x > 0`."""
    x = ctx.mpf(x)
    if x <= 0:
        raise DomainError(f"E1 is only provided for x > 0, got {x}.")
    return ctx.mp.e1(x)


def incgamma_int(s: int, x: Number, ctx: PrecisionContext) -> MPReal:
    """Upper incomplete gamma function `Gamma(s, x)` at an integer order `s` and `x > 0`.

    Positive orders use the finite sum `(s-1)! e^-x sum_{k<s} x^k/k!`; non-positive orders recur
    downwards from `Gamma(0, x) = E1(x)` with `Gamma(s, x) = (Gamma(s+1, x) - x^s e^-x) / s`.
    """
    mp = ctx.mp
    x = ctx.mpf(x)
    if x <= 0:
        raise DomainError(f"Gamma(s, x) is only provided for x > 0, got x={x}.")
    if s >= 1:
        term = mp.mpf(1)
        total = mp.mpf(1)
        for k in range(1, s):
            term = term * x / k
            total += term
        return mp.factorial(s - 1) * mp.exp(-x) * total
    # each downward step loses about log10(x) digits to cancelation
    extra = 10 + math.ceil((-s + 1) * max(1.0, math.log10(float(x)) + 1))
    with mp.extradps(extra):
        value = mp.e1(x)
        exp_minus_x = mp.exp(-x)
        for order in range(0, s, -1):
            value = (value - mp.power(x, order - 1) * exp_minus_x) / (order - 1)
    return mp.mpf(value)
