from fractions import Fraction

import pytest

from bessel_moments.exceptions import DivergenceError, ParameterDomainError
from bessel_moments.moments import (
    ClosedConstantId,
    closed_constant,
    crandall_a_exact,
    crandall_convolution_check,
    crandall_exact,
    crandall_numeric,
    det_numeric,
    ikm,
    jym,
    rogers_check,
    sum_rule_residual,
    sum_rule_terms,
    valid_sum_rules,
)
from bessel_moments.moments.crandall import crandall_c1_closed, crandall_c2_closed
from bessel_moments.mpcore import PrecisionContext


def test_elementary_moments(ctx: PrecisionContext):
    mp = ctx.mp
    assert abs(ikm(0, 1, 1, ctx) - 1) < ctx.tolerance
    assert abs(ikm(0, 1, 0, ctx) - mp.pi / 2) < ctx.tolerance
    assert abs(ikm(0, 2, 1, ctx) - mp.mpf(1) / 2) < ctx.tolerance


def test_closed_moments(ctx: PrecisionContext):
    mp = ctx.mp
    assert abs(ikm(1, 2, 1, ctx) - mp.pi / (3 * mp.sqrt(3))) < ctx.tolerance
    assert abs(ikm(1, 3, 1, ctx) - mp.pi**2 / 16) < ctx.tolerance


def test_bologna_constant(ctx: PrecisionContext):
    mp = ctx.mp
    assert abs(ikm(1, 4, 1, ctx) / (mp.pi**2 * closed_constant("BolognaC", ctx)) - 1) < ctx.tolerance * 100


def test_equal_index_moment(ctx: PrecisionContext):
    # the I0 K0 ~ 1/(2t) tail of IKM(3,3;1) is integrated through its asymptotic series
    value = ikm(3, 3, 1, ctx)
    assert abs(3 * ikm(1, 5, 1, ctx) / ctx.mp.pi**2 / value - 1) < ctx.tolerance * 100


@pytest.mark.parametrize(["a", "b", "n"], [(2, 1, 1), (1, 1, 0), (2, 2, 1), (-1, 2, 1)])
def test_divergent_moments(ctx: PrecisionContext, a: int, b: int, n: int):
    with pytest.raises(DivergenceError):
        ikm(a, b, n, ctx)


def test_jym_divergence(ctx: PrecisionContext):
    with pytest.raises(DivergenceError):
        jym(1, 0, 1, ctx)


@pytest.mark.parametrize(["variant", "m", "n"], [("plus", 2, 0), ("plus", 3, 1), ("minus", 3, 0), ("minus", 5, 2)])
def test_sum_rules(ctx: PrecisionContext, variant, m: int, n: int):
    assert abs(sum_rule_residual(variant, m, n, ctx)) < ctx.tolerance * 100


def test_valid_sum_rules():
    rules = valid_sum_rules(5)
    assert ("minus", 3, 0) in rules
    assert ("plus", 2, 0) in rules
    assert all(n < m for _, m, n in rules)
    with pytest.raises(ParameterDomainError):
        sum_rule_terms("plus", 2, 1)


def test_crandall_exact_values():
    assert crandall_exact(1, 1) == 1
    for ell in range(1, 6):
        assert crandall_exact(1, ell) == crandall_c1_closed(ell)
        assert crandall_exact(2, ell) == crandall_c2_closed(ell)


def test_crandall_integrality():
    for m in range(1, 7):
        for n in range(1, 7):
            value = crandall_exact(m, n)
            assert value.denominator == 1 and value > 0, (m, n, value)


def test_crandall_numeric(ctx: PrecisionContext):
    for m, n in [(1, 1), (2, 2), (3, 1)]:
        assert abs(crandall_numeric(m, n, ctx) - ctx.mpf(crandall_exact(m, n))) < ctx.tolerance * 100


def test_crandall_a_exact():
    assert crandall_a_exact(1) == 0
    assert crandall_a_exact(3) == crandall_exact(4, 2)
    with pytest.raises(ValueError):
        crandall_a_exact(0)


def test_series_checks():
    assert rogers_check(6)
    assert crandall_convolution_check(2, 3, 8)


@pytest.mark.parametrize(["kind", "k"], [("M", 1), ("N", 1), ("M", 2)])
def test_determinants(ctx: PrecisionContext, kind, k: int):
    numeric = det_numeric(kind, k, ctx)
    closed = closed_constant(f"det{kind}({k})", ctx)
    assert abs(numeric / closed - 1) < ctx.tolerance * 100


def test_closed_constant_ids():
    assert str(ClosedConstantId.parse("detM(2)")) == "detM(2)"
    assert ClosedConstantId.parse("BolognaC").index is None
    with pytest.raises(ValueError):
        ClosedConstantId("detN")
    with pytest.raises(ValueError):
        ClosedConstantId("BolognaC", 1)
    assert closed_constant("C1(3)", PrecisionContext(10)) == crandall_c1_closed(3)
    assert Fraction(crandall_c2_closed(1)) == crandall_exact(2, 1)
