from fractions import Fraction

import pytest
import sympy

from bessel_moments.exceptions import DomainError, UnsupportedOrderError
from bessel_moments.mpcore import PrecisionContext
from bessel_moments.vanhove import (
    annihilated_integrals,
    annihilation_residual,
    constancy_spread,
    det_m_recurrence_residual,
    det_n_recurrence_residual,
    family_members,
    leading_polynomial,
    second_coefficient_matches,
    vanhove_operator,
    wronskian_at_one,
    wronskian_closed,
)

u = sympy.Symbol("u")


def test_leading_polynomials():
    assert leading_polynomial(1) == sympy.Poly(u * (u - 4), u)
    assert leading_polynomial(2) == sympy.Poly(u * (u - 1) * (u - 9), u)
    assert leading_polynomial(4) == sympy.Poly(u**2 * (u - 1) * (u - 9) * (u - 25), u)
    for n in range(1, 5):
        assert leading_polynomial(n) == vanhove_operator(n).as_sympy(n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_second_coefficients(n: int):
    assert second_coefficient_matches(n)


def test_unsupported_orders():
    with pytest.raises(UnsupportedOrderError):
        vanhove_operator(5)
    with pytest.raises(UnsupportedOrderError):
        second_coefficient_matches(1)
    with pytest.raises(UnsupportedOrderError):
        leading_polynomial(0)
    with pytest.raises(UnsupportedOrderError):
        wronskian_closed(1, Fraction(1, 2), PrecisionContext(20))
    with pytest.raises(DomainError):
        annihilated_integrals(0)


def test_annihilated_integral_counts():
    # one combined integral, then I0-type for 2 <= j <= n/2 + 1 and K0-type for 2 <= j <= (n+1)/2
    assert len(annihilated_integrals(1)) == 1
    assert len(annihilated_integrals(2)) == 2
    assert len(annihilated_integrals(3)) == 3
    assert len(annihilated_integrals(4)) == 4


def test_family_sizes():
    assert len(family_members("mu", 2)) == 3
    assert len(family_members("nu", 2)) == 4


@pytest.mark.parametrize("k", [1, 2, 3])
def test_determinant_recurrences(ctx: PrecisionContext, k: int):
    assert abs(det_m_recurrence_residual(k, ctx)) < ctx.tolerance * 100
    assert abs(det_n_recurrence_residual(k, ctx)) < ctx.tolerance * 100


@pytest.mark.parametrize("k", [2, 3])
def test_wronskian_at_one(ctx: PrecisionContext, k: int):
    assert abs(wronskian_closed(k, 1, ctx) / wronskian_at_one(k, ctx) - 1) < ctx.tolerance * 100


@pytest.mark.slow
@pytest.mark.parametrize("n", [1, 2])
def test_annihilation(ctx: PrecisionContext, n: int):
    for index in range(len(annihilated_integrals(n))):
        residual = annihilation_residual(n, index, Fraction(1, 2), ctx)
        assert abs(residual.value) < ctx.mp.mpf(10) ** (-(ctx.digits - 10))


@pytest.mark.slow
def test_constancy(ctx: PrecisionContext):
    spread, _ = constancy_spread(1, ctx)
    assert spread < ctx.mp.mpf(10) ** (-(ctx.digits - 10))
