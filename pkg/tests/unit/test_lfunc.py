import pytest

from bessel_moments.exceptions import DomainError
from bessel_moments.lfunc import LValueRequest, lvalue, reflection_residual
from bessel_moments.moments import ikm
from bessel_moments.mpcore import PrecisionContext


def test_request_validation():
    with pytest.raises(DomainError):
        LValueRequest("F4_6", 0)
    with pytest.raises(DomainError):
        LValueRequest("F4_6", 1.5)  # type: ignore[arg-type]
    assert LValueRequest("F4_6", 2).critical
    assert not LValueRequest("F4_6", 5).critical
    assert str(LValueRequest("F6_6", 3)) == "L(F6_6,3)"


def test_sunrise_l_value(ctx: PrecisionContext):
    lhs = ikm(2, 3, 1, ctx)
    rhs = 3 * lvalue("F3_15", 2, ctx) / 4
    assert abs(lhs / rhs - 1) < ctx.tolerance * 100


def test_critical_l_value(ctx: PrecisionContext):
    lhs = ikm(3, 3, 1, ctx)
    rhs = 3 * lvalue("F4_6", 2, ctx) / 2
    assert abs(lhs / rhs - 1) < ctx.tolerance * 100


def test_ratio_of_l_values(ctx: PrecisionContext):
    mp = ctx.mp
    ratio = lvalue("F6_6", 5, ctx) / lvalue("F6_6", 3, ctx)
    assert abs(ratio / (2 * mp.pi**2 / 21) - 1) < ctx.tolerance * 100


@pytest.mark.parametrize(["form", "s"], [("F3_15", 1), ("F4_6", 1), ("F6_6", 2)])
def test_functional_equation(ctx: PrecisionContext, form, s: int):
    assert abs(reflection_residual(form, s, ctx)) < ctx.tolerance * 100


def test_reflection_out_of_range(ctx: PrecisionContext):
    with pytest.raises(DomainError):
        reflection_residual("F4_6", 4, ctx)
