"""Hasse-Weil local factors `Z_n(p, T) = exp(-sum_{k>=1} c_n(p**k) T**k / k)` with `c_n(q) = -(1 + S_n(q)) / q**2`,
their comparison with newform coefficients, and an experimental estimate of `zeta_{7,1}(2)`."""

from __future__ import annotations

import csv
import io
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable

import sympy
from sympy.polys.domains import QQ
from sympy.polys.ring_series import rs_exp
from sympy.polys.rings import ring

from ..exceptions import DomainError
from ..modular import get_newform, newform_coeffs
from ..moments import ikm
from ..mpcore import Estimate, MPReal, PrecisionContext
from ..typing import NewformT
from .fields import FieldDesc
from .kloosterman import EXACT_MAX_PRIME, sym_moment

logger = logging.getLogger(__name__)

MATCHED_NEWFORMS: dict[int, NewformT] = {5: "F3_15", 6: "F4_6"}
"""Symmetric powers whose zeta functions are the L-functions of these newforms."""


def _to_fraction(value: Any) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


@dataclass(frozen=True)
class LocalData:
    p: int
    n: int
    moments: tuple[int, ...]
    """`S_n(p**k)` for `k = 1..d`."""

    coefficients: tuple[Fraction, ...]
    """`c_n(p**k)` for `k = 1..d`."""

    zeta: tuple[Fraction, ...]
    """Coefficients of `Z_n(p, T)` through `T**d`, constant term first."""

    @property
    def degree(self) -> int:
        return len(self.moments)


def local_factor(coefficients: Iterable[Fraction], degree: int) -> tuple[Fraction, ...]:
    """`exp(-sum_k c_k T**k / k)` through `T**degree`, from `c_1, c_2, ...`."""
    R, T = ring("T", QQ)
    exponent = R.zero
    for k, c in enumerate(coefficients, start=1):
        exponent -= QQ(c.numerator, c.denominator) * T**k / k
    if not exponent:
        return (Fraction(1),) + (Fraction(0),) * degree
    series = rs_exp(exponent, T, degree + 1)
    terms = dict(series.terms())
    return tuple(_to_fraction(terms.get((i,), QQ.zero)) for i in range(degree + 1))


def local_data(p: int, n: int, d: int, exact_max_prime: int = EXACT_MAX_PRIME) -> LocalData:
    if not sympy.isprime(p):
        raise DomainError(f"Local factors are defined at primes, got {p}.")
    if d < 1:
        raise DomainError(f"The truncation degree must be positive, got {d}.")
    moments, coefficients = [], []
    for k in range(1, d + 1):
        field = FieldDesc.build(p, k)
        S = sym_moment(field, n, exact_max_prime=exact_max_prime)
        moments.append(S)
        coefficients.append(Fraction(-(1 + S), field.q**2))
    logger.debug("Z_%d(%d, T): S = %s", n, p, moments)
    return LocalData(p, n, tuple(moments), tuple(coefficients), local_factor(coefficients, d))


def local_data_csv(records: Iterable[LocalData]) -> str:
    """Columns `p, k, n, S_n, c_num, c_den`, one row per prime power."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["p", "k", "n", "S_n", "c_num", "c_den"])
    for record in records:
        for k, (S, c) in enumerate(zip(record.moments, record.coefficients), start=1):
            writer.writerow([record.p, k, record.n, S, c.numerator, c.denominator])
    return buffer.getvalue()


@dataclass(frozen=True)
class CoeffMatch:
    p: int
    c: Fraction
    a_p: int

    @property
    def matched(self) -> bool:
        return self.c == self.a_p


def coeff_match(n: int, primes: Iterable[int]) -> list[CoeffMatch]:
    """`c_n(p)` against the `p`-th coefficient of the newform attached to `n`. Mismatches are reported, not raised."""
    try:
        form = MATCHED_NEWFORMS[n]
    except KeyError:
        raise DomainError(f"No newform is attached to symmetric power {n}; expected one of 5, 6.") from None
    primes = sorted(primes)
    if not primes:
        return []
    bad = [p for p in primes if p in get_newform(form).bad_primes]
    if bad:
        raise DomainError(f"Bad primes {bad} of {form} have no matching local factor.")
    coeffs = newform_coeffs(form, primes[-1])
    rows = [CoeffMatch(p, local_data(p, n, 1).coefficients[0], coeffs[p - 1]) for p in primes]
    for row in rows:
        if not row.matched:
            logger.warning("c_%d(%d) = %s but A_%d = %d for %s", n, row.p, row.c, row.p, row.a_p, form)
    return rows


def _zeta71_coefficients(prime_bound: int) -> list[float]:
    """Dirichlet coefficients `b(m)`, `m <= prime_bound`, of `prod_p 1/Z_7(p, p**-s)`."""
    prime_power_terms: dict[int, float] = {}
    for p in sympy.primerange(2, prime_bound + 1):
        degree = 1
        while p ** (degree + 1) <= prime_bound:
            degree += 1
        c = []
        for k in range(1, degree + 1):
            value = sym_moment(FieldDesc.build(p, k), 7, method="modular")
            c.append(-(1 + value) / p ** (2 * k))
        # 1/Z = exp(g) with k g_k = c_k, so e_m = (1/m) sum_k c_k e_{m-k}
        e = [1.0]
        for m in range(1, degree + 1):
            e.append(sum(c[k - 1] * e[m - k] for k in range(1, m + 1)) / m)
        for k in range(1, degree + 1):
            prime_power_terms[p**k] = e[k]

    b = [0.0, 1.0]
    for m in range(2, prime_bound + 1):
        value = 1.0
        for p, k in sympy.factorint(m).items():
            value *= prime_power_terms[p**k]
        b.append(value)
    return b


def zeta71_estimate(prime_bound: int, ctx: PrecisionContext) -> Estimate:
    """Experimental `zeta_{7,1}(2)` from the exponentially smoothed Dirichlet series.

    `S(X) = sum b(m) m**-2 exp(-m/X)` behaves like `zeta_{7,1}(2) + O(1/X)`, so one Richardson step
    `R(X) = 2 S(X) - S(X/2)` is taken at `X0 = prime_bound/40` and `X0/2`; their gap is the reported error.
    """
    if prime_bound < 50:
        raise DomainError(f"The prime bound must be at least 50, got {prime_bound}.")
    mp = ctx.mp
    b = _zeta71_coefficients(prime_bound)

    def smoothed(X: MPReal) -> MPReal:
        return mp.fsum(mp.mpf(b[m]) / m**2 * mp.exp(-m / X) for m in range(1, prime_bound + 1) if b[m])

    def richardson(X: MPReal) -> MPReal:
        return 2 * smoothed(X) - smoothed(X / 2)

    X0 = mp.mpf(prime_bound) / 40
    first, second = richardson(X0), richardson(X0 / 2)
    error = abs(first - second)
    logger.info("zeta_{7,1}(2) ~ %s +- %s (prime bound %d)", mp.nstr(first, 12), mp.nstr(error, 3), prime_bound)
    return Estimate(first, error)


def zeta71_target(ctx: PrecisionContext) -> MPReal:
    """`24 IKM(2,5;1) / (5 pi**2)`."""
    mp = ctx.mp
    return 24 * ikm(2, 5, 1, ctx) / (5 * mp.pi**2)
