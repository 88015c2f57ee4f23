import pytest

from bessel_moments.exceptions import (
    DivergenceError,
    DomainError,
    MisdeclaredDecayError,
    StepUnderflowError,
    UnsupportedOrderError,
)
from bessel_moments.mpcore import PrecisionContext
from bessel_moments.quad import IntegrandSpec, differentiate_param, integrate_de, integrate_oscillatory, j0_zero


def test_exponential_integrand(ctx: PrecisionContext):
    mp = ctx.mp
    value = integrate_de(IntegrandSpec.exponential(lambda t: t * mp.exp(-t), 1, singularity="none"), ctx)
    assert abs(value - 1) < ctx.tolerance


def test_log_singularity(ctx: PrecisionContext):
    mp = ctx.mp
    # int_0^oo log(t) exp(-t) dt = -gamma
    value = integrate_de(IntegrandSpec.exponential(lambda t: mp.log(t) * mp.exp(-t), 1), ctx)
    assert abs(value + mp.euler) < ctx.tolerance


def test_algebraic_integrand(ctx: PrecisionContext):
    mp = ctx.mp
    value = integrate_de(IntegrandSpec.algebraic(lambda t: 1 / (1 + t**2), -2, singularity="none"), ctx)
    assert abs(value - mp.pi / 2) < ctx.tolerance


def test_finite_integrand(ctx: PrecisionContext):
    value = integrate_de(IntegrandSpec.finite(lambda t: t**2, 0, 3), ctx)
    assert abs(value - 9) < ctx.tolerance


def test_linearity(ctx: PrecisionContext):
    mp = ctx.mp

    def f(t):
        return mp.exp(-t)

    def g(t):
        return t**2 * mp.exp(-2 * t)

    combined = integrate_de(IntegrandSpec.exponential(lambda t: 3 * f(t) - 5 * g(t), 1, "none"), ctx)
    separate = 3 * integrate_de(IntegrandSpec.exponential(f, 1, "none"), ctx) - 5 * integrate_de(
        IntegrandSpec.exponential(g, 2, "none"), ctx
    )
    assert abs(combined - separate) < ctx.tolerance


def test_divergent_declarations(ctx: PrecisionContext):
    with pytest.raises(DivergenceError):
        integrate_de(IntegrandSpec.algebraic(lambda t: 1 / (1 + t), -1), ctx)
    with pytest.raises(DivergenceError):
        integrate_de(IntegrandSpec.exponential(lambda t: t, 0), ctx)
    with pytest.raises(DomainError):
        integrate_de(IntegrandSpec.oscillatory(lambda t: t), ctx)


def test_misdeclared_decay(ctx: PrecisionContext):
    mp = ctx.mp
    spec = IntegrandSpec.exponential(lambda t: mp.exp(-t), 4, "none")
    with pytest.raises(MisdeclaredDecayError):
        spec.check_decay(ctx)


def test_j0_zeros(ctx: PrecisionContext):
    mp = ctx.mp
    assert abs(j0_zero(1, ctx) - mp.mpf("2.4048255576957727686")) < mp.mpf("1e-18")
    for k in (1, 5, 20):
        assert abs(mp.besselj(0, j0_zero(k, ctx))) < ctx.tolerance
    with pytest.raises(ValueError):
        j0_zero(0, ctx)


def test_oscillatory_integral():
    ctx = PrecisionContext(15)
    mp = ctx.mp
    # int_0^oo J0(t) dt = 1
    spec = IntegrandSpec.oscillatory(lambda t: mp.besselj(0, t), singularity="none")
    estimate = integrate_oscillatory(spec, ctx)
    assert abs(estimate.value - 1) < mp.mpf("1e-12")


@pytest.mark.parametrize("order", [1, 2, 3, 4])
def test_finite_differences(ctx: PrecisionContext, order: int):
    mp = ctx.mp
    estimate = differentiate_param(mp.exp, 1, order, "finite_difference", ctx)
    assert abs(estimate.value - mp.e) < mp.mpf(10) ** (-(ctx.digits // 2 - 5))


def test_analytic_and_finite_difference_agree(ctx: PrecisionContext):
    mp = ctx.mp

    def derivative(u, order):
        return (-1) ** order * mp.factorial(order) / (1 + u) ** (order + 1)

    analytic = differentiate_param(lambda u: 1 / (1 + u), 0.25, 2, "analytic", ctx, derivative=derivative)
    numeric = differentiate_param(lambda u: 1 / (1 + u), 0.25, 2, "finite_difference", ctx)
    assert abs(analytic.value - numeric.value) < mp.mpf(10) ** (-(ctx.digits // 2 - 5))


def test_differentiation_errors(ctx: PrecisionContext):
    with pytest.raises(UnsupportedOrderError):
        differentiate_param(ctx.mp.exp, 1, 5, "finite_difference", ctx)
    with pytest.raises(ValueError):
        differentiate_param(ctx.mp.exp, 1, 1, "analytic", ctx)
    with pytest.raises(StepUnderflowError):
        differentiate_param(ctx.mp.exp, 1, 1, "finite_difference", ctx, step="1e-40")
