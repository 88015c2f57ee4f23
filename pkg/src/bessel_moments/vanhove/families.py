"""Bessel moments depending on a parameter `u` through one factor `I0(sqrt(u) t)` or `K0(sqrt(u) t)`.

Derivatives in `u` are taken under the integral sign. With `x = sqrt(u) t`,

    d/du I0(x) = t/(2 sqrt(u)) I1(x),    d/du K0(x) = -t/(2 sqrt(u)) K1(x),

and both kernels satisfy `u F'' + F' = (t**2/4) F`, which gives every higher derivative from the first two.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Literal

from .._compat import TypeAlias
from ..exceptions import DivergenceError, DomainError
from ..mpcore import MPReal, Number, PrecisionContext, bessel
from ..quad import DerivativeChain, IntegrandSpec, integrate_de
from ..quad.integrand import Evaluator
from ..typing import FamilyKindT

logger = logging.getLogger(__name__)

KernelT: TypeAlias = Literal["I", "K"]


@dataclass(frozen=True)
class KernelTerm:
    """`coefficient * {I0 or K0}(sqrt(u) t) * I0(t)**i_power * K0(t)**k_power`."""

    coefficient: Fraction
    kernel: KernelT
    i_power: int
    k_power: int

    def rate(self, u: MPReal, ctx: PrecisionContext) -> MPReal:
        root = ctx.mp.sqrt(u)
        return self.k_power - self.i_power + (root if self.kernel == "K" else -root)

    def kernel_derivative(self, t: MPReal, u: MPReal, order: int, ctx: PrecisionContext) -> MPReal:
        """`d^order/du^order` of the `u`-dependent factor."""
        root = ctx.mp.sqrt(u)
        x = root * t
        if self.kernel == "I":
            derivatives = [bessel("I0", x, ctx), t / (2 * root) * bessel("I1", x, ctx)]
        else:
            derivatives = [bessel("K0", x, ctx), -t / (2 * root) * bessel("K1", x, ctx)]
        for r in range(order - 1):
            derivatives.append((t**2 / 4 * derivatives[r] - (r + 1) * derivatives[r + 1]) / u)
        return derivatives[order]


@dataclass(frozen=True)
class KernelIntegral:
    """`int_0^oo sum(terms) t**t_power dt` as a function of `u`."""

    terms: tuple[KernelTerm, ...]
    t_power: int = 1

    def __post_init__(self) -> None:
        if not self.terms:
            raise ValueError("A kernel integral needs at least one term.")

    def integrand(self, u: MPReal, order: int, ctx: PrecisionContext) -> Evaluator:
        def evaluator(t: MPReal) -> MPReal:
            total = 0
            for term in self.terms:
                fixed = bessel("I0", t, ctx) ** term.i_power * bessel("K0", t, ctx) ** term.k_power
                total += ctx.mpf(term.coefficient) * term.kernel_derivative(t, u, order, ctx) * fixed
            return total * t**self.t_power

        return evaluator

    def spec(self, u: MPReal, order: int, ctx: PrecisionContext) -> IntegrandSpec:
        evaluator = self.integrand(u, order, ctx)
        rate = min(term.rate(u, ctx) for term in self.terms)
        if rate > 0:
            return IntegrandSpec.exponential(evaluator, rate)
        # I0(t)**p K0(t)**q ~ (2t)**-(p+q)/2 e**((p-q) t), so only balanced terms survive at rate 0
        if rate == 0:
            balanced = [term for term in self.terms if term.rate(u, ctx) == 0]
            power = self.t_power + order - max(term.i_power + term.k_power + 1 for term in balanced) / 2
            return IntegrandSpec.algebraic(evaluator, power)
        raise DivergenceError(f"Kernel integral diverges at u={u}.")

    def value(self, u: Number, ctx: PrecisionContext, order: int = 0) -> MPReal:
        return _kernel_integral(self, ctx.mpf(u), order, ctx)

    def derivative_chain(self, ctx: PrecisionContext) -> DerivativeChain:
        return lambda u, order: self.value(u, ctx, order)

    def scaled(self, factor: Fraction | int) -> KernelIntegral:
        terms = tuple(
            KernelTerm(term.coefficient * factor, term.kernel, term.i_power, term.k_power) for term in self.terms
        )
        return KernelIntegral(terms, self.t_power)


@lru_cache(maxsize=4096)
def _kernel_integral(integral: KernelIntegral, u: MPReal, order: int, ctx: PrecisionContext) -> MPReal:
    if u <= 0:
        raise DomainError(f"Kernel integrals are evaluated at u > 0, got {u}.")
    value = integrate_de(integral.spec(u, order, ctx), ctx)
    logger.debug("Kernel integral (order %d) at u=%s: %s", order, ctx.mp.nstr(u, 8), ctx.mp.nstr(value, 12))
    return value


def _term(coefficient: Fraction | int, kernel: KernelT, i_power: int, k_power: int) -> KernelTerm:
    return KernelTerm(Fraction(coefficient), kernel, i_power, k_power)


@dataclass(frozen=True)
class MomentFamily:
    """One member `mu^ell_{k,j}` or `nu^ell_{k,j}` of the families spanning the Wronskians.

    For `mu` (`1 <= j <= 2k-1`):

    - `j = 1`: `(1/(2k+1)) int {I0(sqrt(u) t) K0 + 2k K0(sqrt(u) t) I0} K0**(2k-1) t**(2 ell-1) dt`
    - `2 <= j <= k`: `int I0(sqrt(u) t) I0**(j-1) K0**(2k+1-j) t**(2 ell-1) dt`
    - `k < j < 2k`: `int K0(sqrt(u) t) I0**(j-k+1) K0**(3k-1-j) t**(2 ell-1) dt`

    For `nu` (`1 <= j <= 2k`):

    - `j = 1`: `(1/(2k+2)) int {I0(sqrt(u) t) K0 + (2k+1) K0(sqrt(u) t) I0} K0**(2k) t**(2 ell-1) dt`
    - `2 <= j <= k+1`: `int I0(sqrt(u) t) I0**(j-1) K0**(2k+2-j) t**(2 ell-1) dt`
    - `k+1 < j <= 2k`: `int K0(sqrt(u) t) I0**(j-k) K0**(3k+1-j) t**(2 ell-1) dt`
    """

    kind: FamilyKindT
    k: int
    j: int
    ell: int = 1

    def __post_init__(self) -> None:
        size = 2 * self.k - 1 if self.kind == "mu" else 2 * self.k
        if self.k < 1 or not 1 <= self.j <= size:
            raise DomainError(f"No member {self.kind}_{{{self.k},{self.j}}}: j must lie in 1..{size}.")
        if self.ell < 1:
            raise DomainError(f"The power index must be positive, got {self.ell}.")

    @property
    def integral(self) -> KernelIntegral:
        k, j = self.k, self.j
        if self.kind == "mu":
            if j == 1:
                terms = (
                    _term(Fraction(1, 2 * k + 1), "I", 0, 2 * k),
                    _term(Fraction(2 * k, 2 * k + 1), "K", 1, 2 * k - 1),
                )
            elif j <= k:
                terms = (_term(1, "I", j - 1, 2 * k + 1 - j),)
            else:
                terms = (_term(1, "K", j - k + 1, 3 * k - 1 - j),)
        else:
            if j == 1:
                terms = (
                    _term(Fraction(1, 2 * k + 2), "I", 0, 2 * k + 1),
                    _term(Fraction(2 * k + 1, 2 * k + 2), "K", 1, 2 * k),
                )
            elif j <= k + 1:
                terms = (_term(1, "I", j - 1, 2 * k + 2 - j),)
            else:
                terms = (_term(1, "K", j - k, 3 * k + 1 - j),)
        return KernelIntegral(terms, 2 * self.ell - 1)

    def __str__(self) -> str:
        return f"{self.kind}^{self.ell}_{{{self.k},{self.j}}}"


def family_value(k: int, j: int, ell: int, kind: FamilyKindT, u: Number, ctx: PrecisionContext) -> MPReal:
    return MomentFamily(kind, k, j, ell).integral.value(u, ctx)


def family_members(kind: FamilyKindT, k: int, ell: int = 1) -> list[MomentFamily]:
    size = 2 * k - 1 if kind == "mu" else 2 * k
    return [MomentFamily(kind, k, j, ell) for j in range(1, size + 1)]


def annihilated_integrals(n: int) -> list[KernelIntegral]:
    """The integrals killed by the order `n` Vanhove operator on `0 < u < 1`.

    `int I0(sqrt(u) t) K0**(n+1) t dt + (n+1) int K0(sqrt(u) t) I0 K0**n t dt`, then
    `int I0(sqrt(u) t) I0**(j-1) K0**(n+2-j) t dt` for `2 <= j <= n/2 + 1` and
    `int K0(sqrt(u) t) I0**j K0**(n+1-j) t dt` for `2 <= j <= (n+1)/2`.
    """
    if n < 1:
        raise DomainError(f"Operator order must be positive, got {n}.")
    integrals = [KernelIntegral((_term(1, "I", 0, n + 1), _term(n + 1, "K", 1, n)))]
    integrals += [KernelIntegral((_term(1, "I", j - 1, n + 2 - j),)) for j in range(2, n // 2 + 2)]
    integrals += [KernelIntegral((_term(1, "K", j, n + 1 - j),)) for j in range(2, (n + 1) // 2 + 1)]
    return integrals


def constant_image_integral(n: int) -> KernelIntegral:
    """`int I0(sqrt(u) t) K0**(n+1) t dt`, mapped to a constant by the order `n` Vanhove operator."""
    return KernelIntegral((_term(1, "I", 0, n + 1),))
