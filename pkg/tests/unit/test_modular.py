import pytest

from bessel_moments.exceptions import DomainError
from bessel_moments.modular import (
    NEWFORMS,
    EtaQuotient,
    deligne_bound_check,
    eta_qexp,
    eta_transformation_residual,
    f46_argument,
    f66_series_identity,
    get_newform,
    hecke_multiplicative,
    newform_coeffs,
    newform_coeffs_csv,
    q_order,
    reflection_point_residual,
)
from bessel_moments.modular import parametrization
from bessel_moments.mpcore import PrecisionContext


def test_eta_expansion():
    series = eta_qexp(7)
    assert [series.coefficient(n) for n in range(8)] == [1, -1, -1, 0, 0, 1, 0, 1]
    with pytest.raises(ValueError):
        eta_qexp(-1)


def test_eta_quotient():
    quotient = EtaQuotient(((1, 2), (2, 2), (3, 2), (6, 2)))
    assert quotient.leading_exponent == 1
    assert quotient.weight == 4
    with pytest.raises(ValueError):
        EtaQuotient(((0, 1),))


def test_f46_coefficients():
    assert newform_coeffs("F4_6", 7) == (1, -2, -3, 4, 6, 6, -16)


def test_coefficients_csv():
    assert newform_coeffs_csv("F4_6", 3) == "n,A_n\n1,1\n2,-2\n3,-3\n"


def test_get_newform():
    assert get_newform("f4_6") is NEWFORMS["F4_6"]
    with pytest.raises(ValueError):
        get_newform("F8_8")


@pytest.mark.parametrize("z", [1j, 0.25 + 0.9j, -0.4 + 1.5j])
def test_eta_transformation(ctx: PrecisionContext, z: complex):
    assert abs(eta_transformation_residual(z, ctx)) < ctx.tolerance


def test_q_order(ctx: PrecisionContext):
    assert q_order(1j, ctx) > q_order(2j, ctx)
    with pytest.raises(DomainError):
        q_order(-1j, ctx)


@pytest.mark.parametrize("form", list(NEWFORMS))
def test_reflection_points(ctx: PrecisionContext, form):
    assert abs(reflection_point_residual(form, 0.5, ctx)) < ctx.tolerance


@pytest.mark.parametrize("form", list(NEWFORMS))
def test_hecke_and_deligne(form):
    assert hecke_multiplicative(form, 50) == []
    assert deligne_bound_check(form, 100) == []


def test_f66_series():
    assert f66_series_identity(30)


@pytest.mark.parametrize("y", ["0.3", "1", "3"])
def test_f46_argument_is_positive(ctx: PrecisionContext, y: str):
    mp = ctx.mp
    y = ctx.mpf(y)
    x = f46_argument(y, ctx)
    assert x > 0
    # 3 exp(-pi y) (1 + O(exp(-2 pi y)))
    assert abs(x / (3 * mp.exp(-mp.pi * y)) - 1) < 50 * mp.exp(-2 * mp.pi * y)


def test_f46_argument_sign(ctx: PrecisionContext, monkeypatch: pytest.MonkeyPatch):
    # eta(w)**-12 starts with q**(-1/2) = -i exp(pi y), giving a negative argument
    monkeypatch.setattr(parametrization, "F46_ARGUMENT", EtaQuotient(((1, -12),)))
    with pytest.raises(DomainError):
        f46_argument(1, ctx)
