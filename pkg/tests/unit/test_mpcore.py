from fractions import Fraction

import pytest

from bessel_moments.exceptions import DomainError, PoleError, PrecisionOverflowError
from bessel_moments.mpcore import (
    Estimate,
    PrecisionContext,
    RationalSeries,
    bessel,
    digits_of_agreement,
    exponential_integral,
    gamma_real,
    hankel_asymptotic_coefficients,
    ik_product_series,
    incgamma_int,
)
from bessel_moments.mpcore.special import BESSEL_CACHE_SIZE, _bessel_cached


def test_context_validation():
    with pytest.raises(ValueError):
        PrecisionContext(5)
    with pytest.raises(ValueError):
        PrecisionContext(20, guard=-1)


def test_context_derivations(ctx: PrecisionContext):
    assert ctx.working_digits == 35
    assert ctx.doubled().guard == 30
    assert ctx.with_digits(30).digits == 30
    assert ctx.with_guard(5).working_digits == 25
    assert ctx.with_digits(30) == PrecisionContext(30)
    assert hash(ctx) == hash(PrecisionContext(20))


def test_context_mpf(ctx: PrecisionContext):
    assert ctx.mpf(Fraction(1, 4)) == ctx.mp.mpf("0.25")
    assert ctx.mpf(3) == 3


@pytest.mark.parametrize(
    ["value", "expected"],
    [
        (Fraction(1, 3), "1/3"),
        (7, "7"),
        ("0.125", "1.250000000E-01"),
        ("-2", "-2.000000000E+00"),
        ("0.15", "1.500000000E-01"),
    ],
)
def test_render(value, expected):
    ctx = PrecisionContext(10)
    rendered = ctx.render(value if not isinstance(value, str) else ctx.mpf(value))
    assert rendered == expected


def test_render_exact_round_trip(ctx: PrecisionContext):
    value = ctx.mp.pi / 7
    assert ctx.parse(ctx.render_exact(value)) == value
    assert ctx.parse("3/8") == Fraction(3, 8)
    assert ctx.parse("-12") == Fraction(-12)


def test_digits_of_agreement(ctx: PrecisionContext):
    a = ctx.mp.pi
    assert digits_of_agreement(a, a, ctx) == ctx.working_digits
    assert digits_of_agreement(a, a + ctx.mpf("1e-12"), ctx) in (11, 12)
    assert float(Estimate(ctx.mpf(2), ctx.mpf(0))) == 2.0


def test_gamma_real(ctx: PrecisionContext):
    assert abs(gamma_real(Fraction(1, 2), ctx) ** 2 - ctx.mp.pi) < ctx.tolerance
    assert gamma_real(5, ctx) == 24
    with pytest.raises(PoleError):
        gamma_real(0, ctx)
    with pytest.raises(PoleError):
        gamma_real(-3, ctx)


@pytest.mark.parametrize("t", ["0.1", "1", "4.5", "5.5", "12", "30"])
def test_bessel_wronskian(ctx: PrecisionContext, t: str):
    t = ctx.mpf(t)
    wronskian = bessel("I0", t, ctx) * bessel("K1", t, ctx) + bessel("K0", t, ctx) * bessel("I1", t, ctx)
    assert abs(wronskian * t - 1) < ctx.tolerance


@pytest.mark.parametrize("t", ["0.5", "10", "39", "45"])
def test_bessel_j0_y0_match_mpmath(ctx: PrecisionContext, t: str):
    mp = ctx.mp
    t = ctx.mpf(t)
    with mp.workdps(60):
        j0, y0 = mp.besselj(0, t), mp.bessely(0, t)
    assert abs(bessel("J0", t, ctx) - j0) < ctx.tolerance
    assert abs(bessel("Y0", t, ctx) - y0) < ctx.tolerance


def test_bessel_at_zero(ctx: PrecisionContext):
    assert bessel("I0", 0, ctx) == 1
    assert bessel("J0", 0, ctx) == 1
    assert bessel("I1", 0, ctx) == 0
    for kind in ("K0", "K1", "Y0"):
        with pytest.raises(PoleError):
            bessel(kind, 0, ctx)
    with pytest.raises(DomainError):
        bessel("I0", -1, ctx)


def test_bessel_guard_cap():
    ctx = PrecisionContext(20, max_guard=10)
    with pytest.raises(PrecisionOverflowError):
        bessel("J0", 35, ctx)


def test_bessel_beyond_series_cutoff():
    ctx = PrecisionContext(20, max_guard=10)
    mp = ctx.mp
    with mp.workdps(60):
        j0, y0 = mp.besselj(0, 500), mp.bessely(0, 500)
    assert abs(bessel("J0", 500, ctx) - j0) < ctx.tolerance
    assert abs(bessel("Y0", 500, ctx) - y0) < ctx.tolerance


def test_bessel_cache_is_bounded(ctx: PrecisionContext):
    for i in range(1, 50):
        bessel("I0", ctx.mpf(i) / 7, ctx)
    info = _bessel_cached.cache_info()
    assert info.maxsize == BESSEL_CACHE_SIZE
    assert 0 < info.currsize <= BESSEL_CACHE_SIZE


@pytest.mark.parametrize("s", [-5, -2, 0, 1, 3, 10])
@pytest.mark.parametrize("x", ["0.1", "1", "10"])
def test_incgamma_recurrence(ctx: PrecisionContext, s: int, x: str):
    mp = ctx.mp
    x = ctx.mpf(x)
    lhs = incgamma_int(s + 1, x, ctx)
    rhs = s * incgamma_int(s, x, ctx) + x**s * mp.exp(-x)
    assert abs(lhs - rhs) <= ctx.tolerance * max(1, abs(lhs))


def test_incgamma_zero_is_e1(ctx: PrecisionContext):
    assert abs(incgamma_int(0, 2, ctx) - exponential_integral(2, ctx)) < ctx.tolerance
    with pytest.raises(DomainError):
        exponential_integral(0, ctx)


def test_hankel_coefficients():
    assert hankel_asymptotic_coefficients(3) == (Fraction(1), Fraction(1, 8), Fraction(9, 128))


def test_ik_product_series_leading_terms():
    # I0 K0 ~ 1/(2t) (1 + 1/(8 t**2) + ...)
    series = ik_product_series(1, 2)
    assert series.leading_exponent == 1
    assert series.coefficient(1) == Fraction(1, 2)
    assert series.coefficient(2) == 0
    assert series.coefficient(3) == Fraction(1, 16)


def test_rational_series():
    series = RationalSeries.from_coefficients([1, -1, -1, 0])
    assert series.precision == 4
    assert series.coefficient(2) == -1
    with pytest.raises(IndexError):
        series.coefficient(4)
    inverse = series.inverse()
    assert (series * inverse).coeffs == RationalSeries.one(4).coeffs
