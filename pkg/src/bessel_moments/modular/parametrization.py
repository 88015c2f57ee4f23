"""Chan-Zudilin functions of `Gamma_0(6)+3` and the Hankel transforms they parametrize.

`X(z) = [eta(2z) eta(6z) / (eta(z) eta(3z))]**6` and `Z(z) = [eta(z) eta(3z)]**4 / [eta(2z) eta(6z)]**2` satisfy
`Z**2 dX/dz = 2 pi i f_{6,6}`. On the imaginary axis, with `x = 8 sqrt(X(i y))`,

    int J0(x t) I0 K0**3 t dt = (pi**2/16) Z(i y),      int J0(x t) I0**2 K0**2 t dt = (pi y/4) Z(i y).
"""

from __future__ import annotations

import logging
from typing import Literal, Optional

from .._compat import TypeAlias
from ..exceptions import ComplexResidualError, DomainError
from ..mpcore import MPComplex, MPReal, Number, PrecisionContext, RationalSeries, bessel
from ..quad import IntegrandSpec, integrate_de, integrate_oscillatory
from ..typing import ParametrizationT
from .eta import EtaQuotient, eta
from .newforms import NEWFORMS, get_newform

logger = logging.getLogger(__name__)

ModularExprT: TypeAlias = Literal["eta", "X63", "Z63", "F3_15", "F4_6", "F6_6"]

X63 = EtaQuotient(((2, 6), (6, 6), (1, -6), (3, -6)))
Z63 = EtaQuotient(((1, 4), (3, 4), (2, -2), (6, -2)))
F46_ARGUMENT = EtaQuotient(((1, 2), (6, 4), (3, -2), (2, -4)))
"""Times `-3 i`, the Bessel argument of the level 6 transforms at `w = 1/2 + i y`."""
F46_VALUE = EtaQuotient(((3, 1), (2, 6), (1, -3), (6, -2)))


def eval_point(expr: ModularExprT, z: MPComplex, ctx: PrecisionContext) -> MPComplex:
    """Evaluate `eta`, the Chan-Zudilin `X63`/`Z63`, or one of the newforms at `z` in the upper half-plane."""
    z = ctx.mp.mpc(z)
    if expr == "eta":
        return eta(z, ctx)
    if expr == "X63":
        return X63.evaluate(z, ctx)
    if expr == "Z63":
        return Z63.evaluate(z, ctx)
    if expr in NEWFORMS:
        return get_newform(expr).evaluate(z, ctx)
    raise ValueError(f"Unknown modular expression {expr!r}.")


def _real(value: MPComplex, what: str, ctx: PrecisionContext) -> MPReal:
    mp = ctx.mp
    if abs(mp.im(value)) > ctx.tolerance * max(abs(mp.re(value)), 1):
        raise ComplexResidualError(f"{what} = {mp.nstr(value, 10)} should be real.")
    return mp.re(value)


def f66_series_mismatch(M: int, x_series: Optional[RationalSeries] = None) -> Optional[int]:
    """First power of `q` up to `M` at which `Z**2 q dX/dq` and `f_{6,6}` disagree, if any."""
    if M < 1:
        raise ValueError(f"The order must be positive, got {M}.")
    x_series = x_series if x_series is not None else X63.series(M)
    lhs = Z63.series(M + 1) ** 2 * x_series.theta()
    rhs = NEWFORMS["F6_6"].series(M)
    for n in range(1, M + 1):
        if lhs.coefficient(n) != rhs.coefficient(n):
            logger.warning("Z^2 q dX/dq differs from f_{6,6} at q^%d", n)
            return n
    return None


def f66_series_identity(M: int) -> bool:
    return f66_series_mismatch(M) is None


def hankel_argument(y: Number, ctx: PrecisionContext) -> MPReal:
    """`8 sqrt(X(i y))`, positive on the imaginary axis."""
    mp = ctx.mp
    x = _real(X63.evaluate(mp.mpc(0, ctx.mpf(y)), ctx), "X63(iy)", ctx)
    return 8 * mp.sqrt(x)


def f46_argument(y: Number, ctx: PrecisionContext) -> MPReal:
    """`-3 i eta(w)**2 eta(6w)**4 / (eta(3w)**2 eta(2w)**4)` at `w = 1/2 + i y`.

    The quotient starts with `q**(1/2) = i exp(-pi y)` on this line, so the argument is `3 exp(-pi y) (1 + O(q))`.
    """
    mp = ctx.mp
    w = mp.mpc(mp.mpf(1) / 2, ctx.mpf(y))
    value = _real(-3 * mp.j * F46_ARGUMENT.evaluate(w, ctx), "F46 argument", ctx)
    if value <= 0:
        raise DomainError(f"The F46 argument at y = {mp.nstr(ctx.mpf(y), 8)} is {mp.nstr(value, 10)}, not positive.")
    return value


def _f46_value(y: MPReal, ctx: PrecisionContext) -> MPReal:
    mp = ctx.mp
    return _real(F46_VALUE.evaluate(mp.mpc(mp.mpf(1) / 2, y), ctx), "F46 eta quotient", ctx)


def _hankel(kind: Literal["J0", "Y0"], x: MPReal, i_power: int, k_power: int, ctx: PrecisionContext) -> MPReal:
    """`int {J0 or Y0}(x t) I0**i_power K0**k_power t dt` for an exponentially decaying product."""

    def integrand(t: MPReal) -> MPReal:
        return bessel(kind, x * t, ctx) * bessel("I0", t, ctx) ** i_power * bessel("K0", t, ctx) ** k_power * t

    return integrate_de(IntegrandSpec.exponential(integrand, k_power - i_power), ctx)


def parametrization_residual(id: ParametrizationT, y: Number, ctx: PrecisionContext) -> MPReal:
    """Left minus right-hand side of one of the modular parametrizations at `z = i y` (or `w = 1/2 + i y`).

    `F46_J`: `int J0(x t) I0 K0**2 t dt = (pi/(3 sqrt 3)) eta(3w) eta(2w)**6 / (eta(w)**3 eta(6w)**2)`;
    `F46_JY`: `int J0(x t) K0**3 t dt - (3 pi/2) int Y0(x t) I0 K0**2 t dt` equals `pi**2 y/sqrt 3` times that
    quotient. Here `x = f46_argument(y)`.
    """
    mp = ctx.mp
    y = ctx.mpf(y)
    if id in ("IKKK", "IIKK"):
        x = hankel_argument(y, ctx)
        z_value = _real(Z63.evaluate(mp.mpc(0, y), ctx), "Z63(iy)", ctx)
        if id == "IKKK":
            lhs = _hankel("J0", x, 1, 3, ctx)
            rhs = mp.pi**2 / 16 * z_value
        else:

            def integrand(t: MPReal) -> MPReal:
                return bessel("J0", x * t, ctx) * (bessel("I0", t, ctx) * bessel("K0", t, ctx)) ** 2 * t

            lhs = integrate_oscillatory(IntegrandSpec.oscillatory(integrand, x), ctx).value
            rhs = mp.pi * y / 4 * z_value
    elif id in ("F46_J", "F46_JY"):
        x = f46_argument(y, ctx)
        quotient = _f46_value(y, ctx)
        if id == "F46_J":
            lhs = _hankel("J0", x, 1, 2, ctx)
            rhs = mp.pi / (3 * mp.sqrt(3)) * quotient
        else:
            lhs = _hankel("J0", x, 0, 3, ctx) - 3 * mp.pi / 2 * _hankel("Y0", x, 1, 2, ctx)
            rhs = mp.pi**2 * y / mp.sqrt(3) * quotient
    else:
        raise ValueError(f"Unknown parametrization {id!r}.")
    logger.info("%s at y=%s: lhs %s, rhs %s", id, mp.nstr(y, 6), mp.nstr(lhs, 15), mp.nstr(rhs, 15))
    return lhs - rhs
