from __future__ import annotations

import csv
import io
import logging
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Optional

import sympy

from ..mpcore import MPComplex, MPReal, Number, PrecisionContext, RationalSeries
from ..typing import NewformT
from .eta import EtaQuotient

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Newform:
    """A newform of weight `weight` and level `level`, written as a sum of eta quotients."""

    id: NewformT
    weight: int
    level: int
    quotients: tuple[EtaQuotient, ...]
    bad_primes: tuple[int, ...]
    character: Optional[str] = None
    """Nebentypus, recorded for reference only."""

    def series(self, M: int) -> RationalSeries:
        """`q`-expansion known through `q**M`."""
        total = None
        for quotient in self.quotients:
            # leading exponents are positive integers here, so M coefficients reach past q**M
            part = quotient.series(M)
            total = part if total is None else total + part
        assert total is not None
        return total

    def evaluate(self, z: MPComplex, ctx: PrecisionContext) -> MPComplex:
        return ctx.mp.fsum(quotient.evaluate(z, ctx) for quotient in self.quotients)


NEWFORMS: dict[NewformT, Newform] = {
    "F3_15": Newform(
        "F3_15",
        3,
        15,
        (EtaQuotient(((3, 3), (5, 3))), EtaQuotient(((1, 3), (15, 3)))),
        bad_primes=(3, 5),
        character="(d/15)",
    ),
    "F4_6": Newform("F4_6", 4, 6, (EtaQuotient(((1, 2), (2, 2), (3, 2), (6, 2))),), bad_primes=(2, 3)),
    "F6_6": Newform(
        "F6_6",
        6,
        6,
        (EtaQuotient(((2, 9), (3, 9), (1, -3), (6, -3))), EtaQuotient(((1, 9), (6, 9), (2, -3), (3, -3)))),
        bad_primes=(2, 3),
    ),
}


def get_newform(form: NewformT | str) -> Newform:
    key = form.upper() if isinstance(form, str) else form
    try:
        return NEWFORMS[key]  # type: ignore[index]
    except KeyError:
        raise ValueError(f"Unknown newform {form!r}, expected one of {', '.join(NEWFORMS)}.") from None


@lru_cache(maxsize=None)
def newform_coeffs(form: NewformT, M: int) -> tuple[int, ...]:
    """`A_1, ..., A_M` from the exact eta quotient expansions."""
    if M < 1:
        raise ValueError(f"The number of coefficients must be positive, got {M}.")
    series = get_newform(form).series(M)
    coeffs = []
    for n in range(1, M + 1):
        value = series.coefficient(n)
        if value.denominator != 1:
            raise ArithmeticError(f"Non-integral coefficient A_{n} = {value} of {form}.")
        coeffs.append(int(value))
    return tuple(coeffs)


def newform_value(form: NewformT, z: MPComplex, ctx: PrecisionContext) -> MPComplex:
    return get_newform(form).evaluate(z, ctx)


def reflection_point_residual(form: NewformT, y: Number, ctx: PrecisionContext) -> MPReal:
    """`f(i/(N y)) - (sqrt(N) y)**k f(i y)`, real on the imaginary axis and vanishing."""
    mp = ctx.mp
    newform = get_newform(form)
    y = ctx.mpf(y)
    lhs = newform.evaluate(mp.mpc(0, 1 / (newform.level * y)), ctx)
    rhs = (mp.sqrt(newform.level) * y) ** newform.weight * newform.evaluate(mp.mpc(0, y), ctx)
    return mp.re(lhs - rhs)


def newform_coeffs_csv(form: NewformT, M: int) -> str:
    """Columns `n, A_n`."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["n", "A_n"])
    writer.writerows(enumerate(newform_coeffs(form, M), start=1))
    return buffer.getvalue()


def hecke_multiplicative(form: NewformT, bound: int) -> list[tuple[int, int]]:
    """Coprime pairs `(m, n)` with `m n <= bound` at which `A_{mn} != A_m A_n`.

    Pairs involving a bad prime of the form are skipped.
    """
    newform = get_newform(form)
    coeffs = newform_coeffs(form, bound)
    failures = []
    for m in range(2, bound + 1):
        for n in range(m + 1, bound // m + 1):
            if gcd(m, n) != 1 or any((m * n) % p == 0 for p in newform.bad_primes):
                continue
            if coeffs[m * n - 1] != coeffs[m - 1] * coeffs[n - 1]:
                failures.append((m, n))
    if failures:
        logger.warning("%s is not multiplicative at %s", form, failures)
    return failures


def deligne_bound_check(form: NewformT, bound: int) -> list[int]:
    """Primes `p <= bound` at which `|A_p| > 2 p**((k-1)/2)`."""
    newform = get_newform(form)
    coeffs = newform_coeffs(form, bound)
    # A_p**2 <= 4 p**(k-1), in integers
    return [p for p in sympy.primerange(2, bound + 1) if coeffs[p - 1] ** 2 > 4 * p ** (newform.weight - 1)]
