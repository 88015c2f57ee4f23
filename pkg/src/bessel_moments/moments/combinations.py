"""Real combinations of Bessel moments obtained by expanding powers of `pi I0 +- i K0` and `J0 +- i Y0`.

Integer coefficients and powers of pi are kept exact; numeric assembly happens last.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable

from ..exceptions import ParameterDomainError
from ..mpcore import MPComplex, MPReal, PrecisionContext, RationalSeries, bessel, ik_product_series
from ..typing import MomentKindT, SumRuleVariantT
from .ikm import MomentRequest, ikm, integrate_with_tail

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CombinationTerm:
    """`coefficient * pi**pi_power * moment`."""

    coefficient: int
    pi_power: int
    moment: MomentRequest

    def evaluate(self, ctx: PrecisionContext) -> MPReal:
        return self.coefficient * ctx.mp.pi**self.pi_power * self.moment.evaluate(ctx)


def hankel_combination_terms(variant: SumRuleVariantT, m: int, n: int) -> list[CombinationTerm]:
    """Expand `int ([pi I0 + i K0]**m +- [pi I0 - i K0]**m) / i * K0**m * t**n dt` into `IKM` terms.

    The `minus` combination keeps the odd powers of `i K0` (sign `(-1)**((j-1)/2)`), the `plus` one the even
    powers (sign `(-1)**(j/2)`), each with coefficient `2 binom(m, j)`.
    """
    parity = 1 if variant == "minus" else 0
    terms = []
    for j in range(parity, m + 1, 2):
        sign = (-1) ** ((j - parity) // 2)
        terms.append(CombinationTerm(2 * comb(m, j) * sign, m - j, MomentRequest("IKM", m - j, m + j, n)))
    return terms


def check_sum_rule_parameters(variant: SumRuleVariantT, m: int, n: int) -> None:
    if variant == "plus":
        valid = m > 1 and n >= 0 and (m - n) % 2 == 0 and (m - n) // 2 > 0
    else:
        valid = m > 0 and n >= 0 and (m - n - 1) % 2 == 0 and (m - n - 1) // 2 > 0
    if not valid:
        raise ParameterDomainError(f"No {variant} sum rule for m={m}, n={n}.")


def sum_rule_terms(variant: SumRuleVariantT, m: int, n: int) -> list[CombinationTerm]:
    check_sum_rule_parameters(variant, m, n)
    return hankel_combination_terms(variant, m, n)


def evaluate_terms(terms: Iterable[CombinationTerm], ctx: PrecisionContext) -> tuple[MPReal, MPReal]:
    """Sum of the terms together with the largest term magnitude (the scale of the residual)."""
    values = [term.evaluate(ctx) for term in terms]
    return ctx.mp.fsum(values), max((abs(v) for v in values), default=ctx.mp.mpf(0))


def sum_rule_residual(variant: SumRuleVariantT, m: int, n: int, ctx: PrecisionContext) -> MPReal:
    """The left-hand side of the generalized Bailey-Borwein-Broadhurst-Glasser sum rule, which vanishes."""
    residual, scale = evaluate_terms(sum_rule_terms(variant, m, n), ctx)
    logger.debug("%s sum rule (m=%d, n=%d): residual %s, scale %s", variant, m, n, residual, scale)
    return residual


def valid_sum_rules(max_m: int) -> list[tuple[SumRuleVariantT, int, int]]:
    """Every `(variant, m, n)` admitted by the sum rules with `m <= max_m`."""
    rules: list[tuple[SumRuleVariantT, int, int]] = []
    for m in range(1, max_m + 1):
        for n in range(m):
            for variant in ("plus", "minus"):
                try:
                    check_sum_rule_parameters(variant, m, n)
                except ParameterDomainError:
                    continue
                rules.append((variant, m, n))
    return rules


def jym_cancelation_terms(ell: int, m: int, n: int) -> tuple[list[CombinationTerm], list[CombinationTerm]]:
    """Expand `int J0**m {(J0 + i Y0)**n + (-1)**ell (-J0 + i Y0)**n} x**ell dx` into `JYM` monomials.

    Only `j = ell (mod 2)` survives in `binom(n, j) J0**j (i Y0)**(n-j)`; the terms with `n - j` even make up
    the real part, the others the imaginary part. Both vanish.
    """
    real: list[CombinationTerm] = []
    imaginary: list[CombinationTerm] = []
    kind: MomentKindT = "JYM"
    for j in range(ell % 2, n + 1, 2):
        sign = (-1) ** ((n - j) // 2)
        term = CombinationTerm(2 * comb(n, j) * sign, 0, MomentRequest(kind, m + j, n - j, ell))
        (real if (n - j) % 2 == 0 else imaginary).append(term)
    return real, imaginary


def jym_cancelation_residual(ell: int, m: int, n: int, ctx: PrecisionContext) -> MPComplex:
    real, imaginary = jym_cancelation_terms(ell, m, n)
    real_part, _ = evaluate_terms(real, ctx)
    imaginary_part, _ = evaluate_terms(imaginary, ctx)
    return ctx.mp.mpc(real_part, imaginary_part)


def laporta_residual(ctx: PrecisionContext) -> MPReal:
    """`IKM(1,5;3) - (pi**2/3) int I0 K0 (I0**2 K0**2 - 1/(4t**2)) t**3 dt`, which vanishes."""
    mp = ctx.mp

    def subtracted(t: MPReal) -> MPReal:
        product = bessel("I0", t, ctx) * bessel("K0", t, ctx)
        return product * (product**2 - 1 / (4 * t**2))

    def series(N: int) -> RationalSeries:
        return ik_product_series(3, N) - ik_product_series(1, N).shift(2).scale(Fraction(1, 4))

    rhs = mp.pi**2 / 3 * integrate_with_tail(subtracted, series, 3, ctx)
    return ikm(1, 5, 3, ctx) - rhs
