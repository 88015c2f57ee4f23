"""Named operations the identity catalog is written in.

Each operation takes the precision context, the verification settings and keyword parameters, and returns an
`mpf`, an `int` or a `Fraction`. The name and the parameters make up the cache key of the value.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Union

import numpy as np
import sympy

from .. import arith, lfunc, modular, moments, vanhove
from ..app_settings import VerifySettings
from ..mpcore import Estimate, MPReal, PrecisionContext

logger = logging.getLogger(__name__)

Value = Union[MPReal, int, Fraction]


@dataclass(frozen=True)
class Operation:
    func: Callable[..., Value]
    oscillatory: bool = False
    """Evaluated at no more than `VERIFY.JYM_DIGITS` digits."""


OPERATIONS: dict[str, Operation] = {}


def operation(name: str, oscillatory: bool = False) -> Callable[[Callable[..., Value]], Callable[..., Value]]:
    def register(func: Callable[..., Value]) -> Callable[..., Value]:
        OPERATIONS[name] = Operation(func, oscillatory)
        return func

    return register


def get_operation(name: str) -> Operation:
    try:
        return OPERATIONS[name]
    except KeyError:
        raise ValueError(f"Unknown operation {name!r}.") from None


def _count(flag: bool) -> int:
    return 0 if flag else 1


# Moments


@operation("ikm")
def _ikm(ctx: PrecisionContext, settings: VerifySettings, a: int, b: int, n: int) -> Value:
    return moments.ikm(a, b, n, ctx)


@operation("jym", oscillatory=True)
def _jym(ctx: PrecisionContext, settings: VerifySettings, alpha: int, beta: int, n: int) -> Value:
    return moments.jym(alpha, beta, n, ctx)


@operation("closed_constant")
def _closed_constant(ctx: PrecisionContext, settings: VerifySettings, id: str) -> Value:
    return moments.closed_constant(id, ctx)


@operation("det_numeric")
def _det_numeric(ctx: PrecisionContext, settings: VerifySettings, kind: str, k: int) -> Value:
    return moments.det_numeric(kind, k, ctx)  # type: ignore[arg-type]


@operation("sum_rule_residual")
def _sum_rule_residual(ctx: PrecisionContext, settings: VerifySettings, variant: str, m: int, n: int) -> Value:
    return moments.sum_rule_residual(variant, m, n, ctx)  # type: ignore[arg-type]


@operation("crandall_numeric")
def _crandall_numeric(ctx: PrecisionContext, settings: VerifySettings, m: int, n: int) -> Value:
    return moments.crandall_numeric(m, n, ctx)


@operation("crandall_exact")
def _crandall_exact(ctx: PrecisionContext, settings: VerifySettings, m: int, n: int) -> Value:
    return moments.crandall_exact(m, n)


@operation("crandall_non_integers")
def _crandall_non_integers(ctx: PrecisionContext, settings: VerifySettings, max_m: int, max_n: int) -> Value:
    """Number of `C(m, n)` that are not positive integers."""
    return sum(
        1
        for m in range(1, max_m + 1)
        for n in range(1, max_n + 1)
        if (value := moments.crandall_exact(m, n)).denominator != 1 or value <= 0
    )


@operation("crandall_a")
def _crandall_a(ctx: PrecisionContext, settings: VerifySettings, n: int) -> Value:
    return moments.crandall_a(n, ctx)


@operation("crandall_a_exact")
def _crandall_a_exact(ctx: PrecisionContext, settings: VerifySettings, n: int) -> Value:
    return moments.crandall_a_exact(n)


@operation("crandall_convolution")
def _crandall_convolution(ctx: PrecisionContext, settings: VerifySettings, m1: int, m2: int, N: int) -> Value:
    return _count(moments.crandall_convolution_check(m1, m2, N))


@operation("rogers_mismatch")
def _rogers_mismatch(ctx: PrecisionContext, settings: VerifySettings, L: int) -> Value:
    """First failing power of `u`, `0` when the identity holds."""
    return moments.rogers_mismatch(L) or 0


@operation("jym_cancelation", oscillatory=True)
def _jym_cancelation(ctx: PrecisionContext, settings: VerifySettings, ell: int, m: int, n: int) -> Value:
    return abs(moments.jym_cancelation_residual(ell, m, n, ctx))


@operation("laporta_residual")
def _laporta_residual(ctx: PrecisionContext, settings: VerifySettings) -> Value:
    return moments.laporta_residual(ctx)


@operation("crandall_relation")
def _crandall_relation(ctx: PrecisionContext, settings: VerifySettings, j: int) -> Value:
    return moments.crandall_relation_residual(j, ctx)


@operation("n3_reduced_determinant")
def _n3_reduced(ctx: PrecisionContext, settings: VerifySettings) -> Value:
    return moments.n3_reduced_determinant(ctx)


@operation("n3_closed")
def _n3_closed(ctx: PrecisionContext, settings: VerifySettings) -> Value:
    return moments.n3_closed(ctx)


# L-values and modular forms


@operation("lvalue")
def _lvalue(ctx: PrecisionContext, settings: VerifySettings, form: str, s: int) -> Value:
    return lfunc.lvalue(form, s, ctx)  # type: ignore[arg-type]


@operation("lambda_reflection")
def _lambda_reflection(ctx: PrecisionContext, settings: VerifySettings, form: str, s: int) -> Value:
    return lfunc.reflection_residual(form, s, ctx)  # type: ignore[arg-type]


@operation("eta_transformation")
def _eta_transformation(ctx: PrecisionContext, settings: VerifySettings, re: Fraction, im: Fraction) -> Value:
    z = ctx.mp.mpc(ctx.mpf(re), ctx.mpf(im))
    return abs(modular.eta_transformation_residual(z, ctx))


@operation("reflection_point")
def _reflection_point(ctx: PrecisionContext, settings: VerifySettings, form: str, y: Fraction) -> Value:
    return modular.reflection_point_residual(form, y, ctx)  # type: ignore[arg-type]


@operation("f66_mismatch")
def _f66_mismatch(ctx: PrecisionContext, settings: VerifySettings, M: int) -> Value:
    mismatch = modular.f66_series_mismatch(M)
    return 0 if mismatch is None else mismatch


@operation("parametrization", oscillatory=True)
def _parametrization(ctx: PrecisionContext, settings: VerifySettings, id: str, y: Fraction) -> Value:
    return modular.parametrization_residual(id, y, ctx)  # type: ignore[arg-type]


@operation("hecke_failures")
def _hecke_failures(ctx: PrecisionContext, settings: VerifySettings, form: str, bound: int) -> Value:
    return len(modular.hecke_multiplicative(form, bound))  # type: ignore[arg-type]


@operation("deligne_violations")
def _deligne_violations(ctx: PrecisionContext, settings: VerifySettings, form: str, bound: int) -> Value:
    return len(modular.deligne_bound_check(form, bound))  # type: ignore[arg-type]


# Vanhove operators and Wronskians


@operation("operator_mismatches")
def _operator_mismatches(ctx: PrecisionContext, settings: VerifySettings, max_n: int) -> Value:
    """Orders `2..max_n` whose tabulated leading coefficients break the known leading two terms."""
    return sum(_count(vanhove.second_coefficient_matches(n)) for n in range(2, max_n + 1))


@operation("annihilation_max")
def _annihilation_max(ctx: PrecisionContext, settings: VerifySettings, n: int, index: int) -> Value:
    return max(abs(vanhove.annihilation_residual(n, index, u, ctx).value) for u in vanhove.U_GRID)


@operation("constancy_spread")
def _constancy_spread(ctx: PrecisionContext, settings: VerifySettings, n: int) -> Value:
    spread, _ = vanhove.constancy_spread(n, ctx)
    return spread


@operation("wronskian_numeric")
def _wronskian_numeric(ctx: PrecisionContext, settings: VerifySettings, k: int, u: Fraction) -> Value:
    return vanhove.wronskian_numeric(k, u, ctx).value


@operation("wronskian_closed")
def _wronskian_closed(ctx: PrecisionContext, settings: VerifySettings, k: int, u: Fraction) -> Value:
    return vanhove.wronskian_closed(k, u, ctx)


@operation("wronskian_at_one")
def _wronskian_at_one(ctx: PrecisionContext, settings: VerifySettings, k: int) -> Value:
    return vanhove.wronskian_at_one(k, ctx)


@operation("evolution_residual")
def _evolution_residual(ctx: PrecisionContext, settings: VerifySettings, kind: str, k: int, u: Fraction) -> Value:
    return vanhove.omega_evolution_residual(kind, k, u, ctx).value  # type: ignore[arg-type]


@operation("det_m_recurrence")
def _det_m_recurrence(ctx: PrecisionContext, settings: VerifySettings, k: int) -> Value:
    return vanhove.det_m_recurrence_residual(k, ctx)


@operation("det_n_recurrence")
def _det_n_recurrence(ctx: PrecisionContext, settings: VerifySettings, k: int) -> Value:
    return vanhove.det_n_recurrence_residual(k, ctx)


# Kloosterman moments


@operation("sym_moment")
def _sym_moment(ctx: PrecisionContext, settings: VerifySettings, p: int, k: int, n: int) -> Value:
    field = arith.FieldDesc.build(p, k)
    return arith.sym_moment(field, n, exact_max_prime=settings.KLOOSTERMAN_EXACT_MAX_PRIME)


@operation("weil_violations")
def _weil_violations(ctx: PrecisionContext, settings: VerifySettings, bound: int) -> Value:
    return sum(len(arith.weil_bound_violations(field)) for field in arith.prime_power_fields(bound))


@operation("coeff_mismatches")
def _coeff_mismatches(ctx: PrecisionContext, settings: VerifySettings, n: int, bound: int) -> Value:
    bad = modular.get_newform(arith.MATCHED_NEWFORMS[n]).bad_primes
    primes = [p for p in sympy.primerange(2, bound + 1) if p not in bad]
    return sum(_count(row.matched) for row in arith.coeff_match(n, primes))


@operation("galois_gap")
def _galois_gap(ctx: PrecisionContext, settings: VerifySettings, p: int, n: int) -> Value:
    """`S_n(p**2)` over the second least modulus minus the value over the least one."""
    moduli = arith.irreducible_moduli(p, 2)
    first, second = next(moduli), next(moduli)
    values = [arith.sym_moment(arith.FieldDesc.build(p, 2, modulus), n) for modulus in (first, second)]
    return values[1] - values[0]


POWER_SUM_FIELDS = ((5, 1), (7, 1), (11, 1), (13, 1), (2, 3), (3, 2))


@operation("power_sum_max")
def _power_sum_max(ctx: PrecisionContext, settings: VerifySettings, samples: int, seed: int) -> Value:
    rng = np.random.default_rng(seed)
    worst = ctx.mp.mpf(0)
    for _ in range(samples):
        p, k = POWER_SUM_FIELDS[rng.integers(len(POWER_SUM_FIELDS))]
        field = arith.FieldDesc.build(p, k)
        a = int(rng.integers(1, field.q))
        n = int(rng.integers(1, 9))
        worst = max(worst, arith.power_sum_residual(field, a, n, ctx))
    return worst


@lru_cache(maxsize=None)
def _zeta71(prime_bound: int, ctx: PrecisionContext) -> Estimate:
    return arith.zeta71_estimate(prime_bound, ctx)


@operation("zeta71_estimate")
def _zeta71_estimate(ctx: PrecisionContext, settings: VerifySettings, prime_bound: int) -> Value:
    return _zeta71(prime_bound, ctx).value


@operation("zeta71_uncertainty")
def _zeta71_uncertainty(ctx: PrecisionContext, settings: VerifySettings, prime_bound: int) -> Value:
    return _zeta71(prime_bound, ctx).error


@operation("zeta71_target")
def _zeta71_target(ctx: PrecisionContext, settings: VerifySettings) -> Value:
    return arith.zeta71_target(ctx)


def evaluate_operation(name: str, params: dict[str, Any], ctx: PrecisionContext, settings: VerifySettings) -> Value:
    return get_operation(name).func(ctx, settings, **params)
