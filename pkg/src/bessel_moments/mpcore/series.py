from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal, Union

from .._compat import Self, TypeAlias

VariableT: TypeAlias = Literal["inverse_z", "q"]
Exponent: TypeAlias = Union[int, Fraction]


@dataclass(frozen=True)
class RationalSeries:
    """A truncated formal series `x**e * (c_0 + c_1 x + ... + c_{N-1} x**(N-1))` with exact coefficients.

    `x` is `1/z` or `q` depending on `variable`. Coefficients at exponents `e + N` and beyond are unknown,
    so arithmetic truncates results to the precision both operands know.
    """

    leading_exponent: Exponent
    coeffs: tuple[Fraction, ...]
    variable: VariableT = "q"

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if isinstance(self.leading_exponent, Fraction) and self.leading_exponent.denominator == 1:
            object.__setattr__(self, "leading_exponent", int(self.leading_exponent))

    @classmethod
    def from_coefficients(
        cls, coeffs: Iterable[int | Fraction], leading_exponent: Exponent = 0, variable: VariableT = "q"
    ) -> Self:
        return cls(leading_exponent, tuple(Fraction(c) for c in coeffs), variable)

    @classmethod
    def one(cls, length: int, variable: VariableT = "q") -> Self:
        return cls(0, (Fraction(1),) + (Fraction(0),) * (length - 1), variable)

    def __len__(self) -> int:
        return len(self.coeffs)

    @property
    def precision(self) -> Exponent:
        """First exponent whose coefficient is unknown."""
        return self.leading_exponent + len(self.coeffs)

    def exponents(self) -> list[Exponent]:
        return [self.leading_exponent + i for i in range(len(self.coeffs))]

    def coefficient(self, exponent: Exponent) -> Fraction:
        offset = exponent - self.leading_exponent
        if offset < 0:
            return Fraction(0)
        if offset >= len(self.coeffs):
            raise IndexError(f"Coefficient of x^{exponent} is beyond the series precision {self.precision}.")
        if not isinstance(offset, int) and Fraction(offset).denominator != 1:
            return Fraction(0)
        return self.coeffs[int(offset)]

    def truncate(self, length: int) -> Self:
        return type(self)(self.leading_exponent, self.coeffs[:length], self.variable)

    def normalized(self) -> Self:
        """Drop leading zero coefficients, shifting the leading exponent."""
        start = next((i for i, c in enumerate(self.coeffs) if c != 0), len(self.coeffs))
        return type(self)(self.leading_exponent + start, self.coeffs[start:], self.variable)

    def shift(self, exponent: Exponent) -> Self:
        """Multiply by `x**exponent`."""
        return type(self)(self.leading_exponent + exponent, self.coeffs, self.variable)

    def scale(self, factor: int | Fraction) -> Self:
        return type(self)(self.leading_exponent, tuple(factor * c for c in self.coeffs), self.variable)

    def stretch(self, factor: int) -> Self:
        """Substitute `x -> x**factor`."""
        coeffs = [Fraction(0)] * ((len(self.coeffs) - 1) * factor + 1)
        for i, c in enumerate(self.coeffs):
            coeffs[i * factor] = c
        return type(self)(self.leading_exponent * factor, tuple(coeffs), self.variable)

    def theta(self) -> Self:
        """Apply `x d/dx`."""
        return type(self)(
            self.leading_exponent,
            tuple(c * (self.leading_exponent + i) for i, c in enumerate(self.coeffs)),
            self.variable,
        )

    def _check_compatible(self, other: RationalSeries) -> None:
        if self.variable != other.variable:
            raise ValueError(f"Cannot combine series in {self.variable!r} and {other.variable!r}.")

    def __neg__(self) -> Self:
        return self.scale(-1)

    def __add__(self, other: RationalSeries) -> Self:
        if not isinstance(other, RationalSeries):
            return NotImplemented
        self._check_compatible(other)
        gap = other.leading_exponent - self.leading_exponent
        if Fraction(gap).denominator != 1:
            raise ValueError("Cannot add series whose exponents differ by a non-integer.")
        start = min(self.leading_exponent, other.leading_exponent)
        stop = min(self.precision, other.precision)
        coeffs = []
        exponent = start
        while exponent < stop:
            coeffs.append(self.coefficient(exponent) + other.coefficient(exponent))
            exponent += 1
        return type(self)(start, tuple(coeffs), self.variable)

    def __sub__(self, other: RationalSeries) -> Self:
        return self + (-other)

    def __mul__(self, other: RationalSeries | int | Fraction) -> Self:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, RationalSeries):
            return NotImplemented
        self._check_compatible(other)
        length = min(len(self.coeffs), len(other.coeffs))
        a, b = self.coeffs, other.coeffs
        coeffs = [sum((a[i] * b[n - i] for i in range(n + 1)), Fraction(0)) for n in range(length)]
        return type(self)(self.leading_exponent + other.leading_exponent, tuple(coeffs), self.variable)

    __rmul__ = __mul__

    def inverse(self) -> Self:
        """Multiplicative inverse. The leading coefficient must be nonzero."""
        a = self.coeffs
        if not a or a[0] == 0:
            raise ZeroDivisionError("Series with vanishing leading coefficient is not invertible.")
        inv = [1 / a[0]]
        for n in range(1, len(a)):
            inv.append(-sum((a[i] * inv[n - i] for i in range(1, n + 1)), Fraction(0)) / a[0])
        return type(self)(-self.leading_exponent, tuple(inv), self.variable)

    def __truediv__(self, other: RationalSeries) -> Self:
        return self * other.inverse()

    def __pow__(self, exponent: int) -> Self:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = type(self)(0, (Fraction(1),) + (Fraction(0),) * (len(self.coeffs) - 1), self.variable)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result
