"""Crandall numbers: integer-valued Bessel moment combinations and their exact values from Hankel asymptotics.

With `P(w)` the even series of `|H0^(1)|**2` normalised to `P(0) = 1`, the Crandall number is

    C(m, n) = (-1)**(n+1) 2**(e + 2n - 3) [w**(2n-2)] P(w)**m,   e = 1 + (n-1)(1 - (-1)**m),

and equals `2**e / pi**(m+1)` times the moment combination of `hankel_combination_terms("minus", m, .)`
weighted by `(2t)**(2n+m-3)`.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import comb, factorial
from typing import Optional

from ..mpcore import MPReal, PrecisionContext, hankel_product_series
from ..mpcore.hankel import double_factorial
from .combinations import evaluate_terms, hankel_combination_terms

logger = logging.getLogger(__name__)


def _power_of_two_exponent(m: int, n: int) -> int:
    return 1 + (n - 1) * (1 - (-1) ** m)


def crandall_numeric(m: int, n: int, ctx: PrecisionContext) -> MPReal:
    """`C(m, n)` from numerically integrated Bessel moments."""
    if m < 1 or n < 1:
        raise ValueError(f"Crandall numbers are indexed by positive integers, got m={m}, n={n}.")
    mp = ctx.mp
    weight = 2 * n + m - 3
    total, _ = evaluate_terms(hankel_combination_terms("minus", m, weight), ctx)
    return mp.mpf(2) ** (_power_of_two_exponent(m, n) + weight) / mp.pi ** (m + 1) * total


def crandall_exact(m: int, n: int) -> Fraction:
    """`C(m, n)` from the exact coefficient of `1/z**(2n+m-2)` in `hankel_product_series(m, n)`."""
    if m < 1 or n < 1:
        raise ValueError(f"Crandall numbers are indexed by positive integers, got m={m}, n={n}.")
    coefficient = hankel_product_series(m, n).coefficient(2 * n + m - 2)
    return (-1) ** (n + 1) * Fraction(2) ** (_power_of_two_exponent(m, n) + 2 * n - 3 + m) * coefficient


def crandall_a(n: int, ctx: PrecisionContext) -> MPReal:
    """`A(n) = (2/pi)**4 int {[pi I0]**2 - K0**2} I0 K0**5 (2t)**(2n-1) dt`."""
    if n < 1:
        raise ValueError(f"A(n) is indexed by positive integers, got {n}.")
    mp = ctx.mp
    total, _ = evaluate_terms(hankel_combination_terms("minus", 4, 2 * n - 1), ctx)
    # the combination carries 8 pi (pi**2 I0**3 K0**5 - I0 K0**7)
    return (2 / mp.pi) ** 4 * mp.mpf(2) ** (2 * n - 1) * total / (8 * mp.pi)


def crandall_a_exact(n: int) -> Fraction:
    """`A(1) = 0` by the sum rule and `A(n) = C(4, n-1)` afterwards."""
    if n < 1:
        raise ValueError(f"A(n) is indexed by positive integers, got {n}.")
    return Fraction(0) if n == 1 else crandall_exact(4, n - 1)


def crandall_c1_closed(ell: int) -> int:
    """`C(1, ell) = [(2 ell - 3)!!]**2 binom(2 ell - 2, ell - 1)`."""
    return double_factorial(2 * ell - 3) ** 2 * comb(2 * ell - 2, ell - 1)


def crandall_c2_closed(ell: int) -> Fraction:
    """`C(2, ell)` as the convolution sum of the `C(1, .)` building blocks."""

    def block(j: int) -> Fraction:
        return Fraction(factorial(2 * j) ** 3, factorial(j) ** 4)

    total = sum((block(ell - k) * block(k - 1) for k in range(1, ell + 1)), Fraction(0))
    return total / 2 ** (4 * (ell - 1))


def crandall_convolution_check(m1: int, m2: int, N: int) -> bool:
    """Exact check that the Hankel product series multiply: `S(m1) S(m2) = S(m1 + m2)`."""
    product = hankel_product_series(m1, N) * hankel_product_series(m2, N)
    target = hankel_product_series(m1 + m2, N)
    return product.leading_exponent == target.leading_exponent and product.coeffs == target.coeffs


def rogers_mismatch(L: int) -> Optional[int]:
    """The first power of `u` up to `L` at which Rogers' generating function identity fails, if any.

    With `alpha(ell) = C(2, ell)`, the identity reads

        sum_ell (alpha(ell+1) - ell**2 alpha(ell)) / (ell!)**2 u**ell
            = 3 sum_n [(2n-1)!!]**2 binom(3n-1, 2n) / (n! 2**n)**2 * u**(2n) / (1-u)**(3n).
    """
    if L < 1:
        raise ValueError(f"The order must be positive, got {L}.")
    alpha = [crandall_exact(2, ell) for ell in range(1, L + 2)]
    lhs = [Fraction(0)] + [(alpha[ell] - ell**2 * alpha[ell - 1]) / factorial(ell) ** 2 for ell in range(1, L + 1)]

    rhs = [Fraction(0)] * (L + 1)
    for n in range(1, L // 2 + 1):
        numerator = double_factorial(2 * n - 1) ** 2 * comb(3 * n - 1, 2 * n)
        prefactor = 3 * Fraction(numerator, (factorial(n) * 2**n) ** 2)
        # (1 - u)**(-3n) = sum_r binom(3n + r - 1, r) u**r
        for r in range(L + 1 - 2 * n):
            rhs[2 * n + r] += prefactor * comb(3 * n + r - 1, r)

    for power in range(1, L + 1):
        if lhs[power] != rhs[power]:
            logger.warning("Rogers identity fails at u^%d: %s != %s", power, lhs[power], rhs[power])
            return power
    return None


def rogers_check(L: int) -> bool:
    return rogers_mismatch(L) is None
