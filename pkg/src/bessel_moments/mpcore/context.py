from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from functools import cached_property
from typing import Any, Union

from mpmath import libmp
from mpmath.ctx_mp import MPContext

from .._compat import Self, TypeAlias
from ..app_settings import BesselMomentsSettings, QuadratureSettings

MPReal: TypeAlias = Any
"""An `mpf` instance of the context's `mpmath.MPContext`."""

MPComplex: TypeAlias = Any
"""An `mpc` instance of the context's `mpmath.MPContext`."""

Number: TypeAlias = Union[int, Fraction, float, MPReal]


@dataclass(frozen=True)
class PrecisionContext:
    """Requested decimal digits plus the guard digits every computation carries.

    The underlying `mpmath` context (`ctx.mp`) works at `digits + guard` decimal digits.
    Equal contexts compare and hash equal, so results can be memoized per context.
    """

    digits: int
    """Requested number of significant decimal digits."""

    guard: int = 15
    """Extra working digits."""

    max_guard: int = 400
    """Cap on the extra digits spent absorbing cancelation in power series."""

    quadrature: QuadratureSettings = field(default_factory=QuadratureSettings)
    """Settings of the integration engines."""

    def __post_init__(self) -> None:
        if self.digits < 10:
            raise ValueError(f"At least 10 digits are required, got {self.digits}.")
        if self.guard < 0:
            raise ValueError(f"Guard digits must be non-negative, got {self.guard}.")

    @classmethod
    def from_settings(cls, settings: BesselMomentsSettings, digits: int | None = None) -> Self:
        return cls(
            digits=digits if digits is not None else settings.VERIFY.DIGITS,
            guard=settings.GUARD_DIGITS,
            max_guard=settings.MAX_GUARD_DIGITS,
            quadrature=settings.QUADRATURE,
        )

    def __getstate__(self) -> dict[str, Any]:
        state = dict(self.__dict__)
        state.pop("mp", None)
        return state

    def __setstate__(self, state: dict[str, Any]) -> None:
        self.__dict__.update(state)

    @property
    def working_digits(self) -> int:
        return self.digits + self.guard

    @cached_property
    def mp(self) -> MPContext:
        mp = MPContext()
        mp.dps = self.working_digits
        return mp

    @property
    def tolerance(self) -> MPReal:
        """Relative accuracy promised on results: `10**-digits`."""
        return self.mp.mpf(10) ** (-self.digits)

    @property
    def eps(self) -> MPReal:
        """Resolution of the working precision."""
        return self.mp.eps

    def with_guard(self, guard: int) -> Self:
        return replace(self, guard=guard)

    def with_digits(self, digits: int) -> Self:
        return replace(self, digits=digits)

    def doubled(self) -> Self:
        """The same request carried with twice the guard digits."""
        return replace(self, guard=max(2 * self.guard, 1))

    def mpf(self, value: Number | str) -> MPReal:
        if isinstance(value, Fraction):
            return self.mp.mpf(value.numerator) / value.denominator
        return self.mp.mpf(value)

    def render(self, value: Number | MPComplex) -> str:
        """Render `value` with `digits` significant figures, rounding half to even.

        Exact rationals and integers are rendered exactly.
        """
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return str(value)
        if isinstance(value, complex) or hasattr(value, "_mpc_"):
            value = self.mp.mpc(value)
            imag = self.render(value.imag)
            sign = "" if imag.startswith("-") else "+"
            return f"{self.render(value.real)}{sign}{imag}j"
        value = self.mp.mpf(value)
        if not self.mp.isfinite(value):
            return str(value)
        if value == 0:
            return "0." + "0" * (self.digits - 1) + "E+0"
        decimal = Decimal(libmp.to_str(value._mpf_, self.digits + 10, strip_zeros=False))
        with localcontext() as dctx:
            dctx.prec = self.digits
            dctx.rounding = ROUND_HALF_EVEN
            rounded = +decimal
        return f"{rounded:.{self.digits - 1}E}"

    def render_exact(self, value: Number) -> str:
        """Render `value` with enough digits to recover the working-precision binary value."""
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return str(value)
        value = self.mp.mpf(value)
        return libmp.to_str(value._mpf_, libmp.repr_dps(self.mp.prec))

    def parse(self, text: str) -> MPReal | Fraction:
        """Inverse of `render` and `render_exact`."""
        text = text.strip()
        if "/" in text or (text.lstrip("-").isdigit()):
            return Fraction(text)
        return self.mp.mpf(text)


def digits_of_agreement(a: Number, b: Number, ctx: PrecisionContext) -> int:
    """Number of leading significant decimal digits shared by `a` and `b`."""
    mp = ctx.mp
    a, b = ctx.mpf(a), ctx.mpf(b)
    if a == b:
        return ctx.working_digits
    scale = max(abs(a), abs(b))
    if scale == 0:
        return ctx.working_digits
    diff = abs(a - b) / scale
    return max(0, min(ctx.working_digits, int(math.floor(-mp.log10(diff)))))


@dataclass(frozen=True)
class Estimate:
    """A value together with an estimate of its absolute error."""

    value: MPReal
    error: MPReal

    def __float__(self) -> float:
        return float(self.value)
