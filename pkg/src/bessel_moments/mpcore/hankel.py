"""Exact asymptotic series of products of Hankel and modified Bessel functions.

With `a_k = [(2k-1)!!]**2 / (k! 8**k)`, the Hankel functions of order zero expand as

    H0^(1,2)(z) ~ sqrt(2/(pi z)) exp(+-i(z - pi/4)) sum_k (-+i)**k a_k z**-k,

so that `H0^(1)(z) H0^(2)(z) ~ 2/(pi z) P(1/z)` where `P` only has even powers with rational coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .series import RationalSeries


def double_factorial(n: int) -> int:
    """`n!! = n (n-2) (n-4) ...`, with `(-1)!! = 0!! = 1`."""
    result = 1
    while n > 1:
        result *= n
        n -= 2
    return result


@lru_cache(maxsize=None)
def hankel_asymptotic_coefficients(N: int) -> tuple[Fraction, ...]:
    """The coefficients `a_0, ..., a_{N-1}` of the Hankel asymptotic expansion."""
    return tuple(Fraction(double_factorial(2 * k - 1) ** 2, factorial(k) * 8**k) for k in range(N))


@lru_cache(maxsize=None)
def _modulus_series(N: int) -> tuple[Fraction, ...]:
    """Dense coefficients of `P(w)` (|u(w)|**2 on the real axis) up to `w**(2N-2)`."""
    a = hankel_asymptotic_coefficients(2 * N - 1)
    coeffs = []
    for power in range(2 * N - 1):
        if power % 2:
            coeffs.append(Fraction(0))
            continue
        total = sum(((-1) ** k * a[k] * a[power - k] for k in range(power + 1)), Fraction(0))
        coeffs.append((-1) ** (power // 2) * total)
    return tuple(coeffs)


@lru_cache(maxsize=None)
def hankel_product_series(m: int, N: int) -> RationalSeries:
    """Exact series of `(pi/2)**(2m) [H0^(1)(z) H0^(2)(z)]**m / pi**m` in powers of `1/z`.

    The result starts at `z**-m` and holds the dense coefficients of the exponents `m, ..., m + 2N - 2`
    (every other one vanishes). Multiplying by `pi**m` recovers the Hankel product itself.
    """
    if m < 1 or N < 1:
        raise ValueError(f"m and N must be positive, got m={m}, N={N}.")
    modulus = RationalSeries(0, _modulus_series(N), "inverse_z")
    return (modulus**m).scale(Fraction(1, 2**m)).shift(m)


@lru_cache(maxsize=None)
def ik_product_series(a: int, N: int) -> RationalSeries:
    """Exact asymptotic series of `[I0(t) K0(t)]**a` in powers of `1/t` (dense, `2N - 1` coefficients)."""
    if a < 1 or N < 1:
        raise ValueError(f"a and N must be positive, got a={a}, N={N}.")
    # I0 K0 ~ 1/(2t) P(i/t): the imaginary-axis image of the Hankel modulus
    rotated = tuple(c * (-1) ** (i // 2) for i, c in enumerate(_modulus_series(N)))
    base = RationalSeries(0, rotated, "inverse_z")
    return (base**a).scale(Fraction(1, 2**a)).shift(a)
