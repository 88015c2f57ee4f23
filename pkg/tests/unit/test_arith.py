import itertools
from fractions import Fraction

import numpy as np
import pytest

from bessel_moments.arith import (
    CycloInt,
    FieldDesc,
    coeff_match,
    cyclic_square_mod,
    irreducible_moduli,
    kl2_counts,
    local_data,
    local_data_csv,
    local_factor,
    power_sum_residual,
    prime_power_fields,
    residue_primes,
    sym_moment,
    sym_moment_fast,
    weil_bound_violations,
    zeta71_estimate,
)
from bessel_moments.exceptions import DomainError, NonIntegerCollapseError
from bessel_moments.mpcore import PrecisionContext


def test_cyclotomic_arithmetic():
    zeta = CycloInt(3, (0, 1))
    zeta_squared = zeta * zeta
    assert zeta_squared == CycloInt(3, (-1, -1))
    assert (zeta * zeta_squared).to_int() == 1
    assert CycloInt.from_powers(3, [1, 1, 1]).to_int() == 0
    assert (2 - CycloInt.from_int(5, 3)).to_int() == -1
    with pytest.raises(NonIntegerCollapseError):
        zeta.to_int()
    with pytest.raises(ValueError):
        CycloInt(5, (1, 2))


def test_cyclotomic_embedding(ctx: PrecisionContext):
    zeta = CycloInt(5, (0, 1, 0, 0))
    assert abs(zeta.embed() - complex(ctx.mp.expjpi(ctx.mpf(2) / 5))) < 1e-12


@pytest.mark.parametrize(["p", "k", "count"], [(2, 2, 1), (3, 2, 3), (2, 3, 2), (5, 1, 5)])
def test_irreducible_moduli(p: int, k: int, count: int):
    assert len(list(irreducible_moduli(p, k))) == count


def test_irreducible_moduli_domain():
    with pytest.raises(ValueError):
        next(irreducible_moduli(4, 1))
    with pytest.raises(ValueError):
        next(irreducible_moduli(2, 0))


def test_field_arithmetic():
    field = FieldDesc.build(2, 2)
    assert field.modulus == (1, 1, 1)
    assert field.q == 4
    assert str(field) == "F_2^2"
    # x * x = x + 1
    assert field.multiply(2, 2) == 3
    assert field.power(2, 3) == 1
    assert field.divide(3, 2) == 2
    assert sorted(field.table("exp").tolist()) == [1, 2, 3]
    with pytest.raises(ValueError):
        FieldDesc.build(2, 2, modulus=(1, 0, 1))


def test_prime_power_fields():
    assert [field.q for field in prime_power_fields(10)] == [2, 4, 8, 3, 9, 5, 7]


def test_kloosterman_sum_over_f2():
    assert kl2_counts(FieldDesc.build(2), 1).to_int() == 1
    with pytest.raises(DomainError):
        kl2_counts(FieldDesc.build(2), 0)


@pytest.mark.parametrize(["p", "k"], [(2, 1), (2, 3), (3, 2), (5, 1), (7, 1), (13, 1)])
def test_first_moment(p: int, k: int):
    field = FieldDesc.build(p, k)
    assert sym_moment(field, 1) == -1
    assert sym_moment(field, 0) == field.q - 1


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_exact_and_fft_agree(n: int):
    field = FieldDesc.build(11)
    assert sym_moment(field, n, method="cyclotomic") == sym_moment(field, n, method="fft")


@pytest.mark.parametrize(["p", "k"], [(7, 1), (11, 1), (2, 4), (3, 2), (5, 2)])
@pytest.mark.parametrize("n", [0, 1, 4, 6])
def test_exact_paths_agree(p: int, k: int, n: int):
    field = FieldDesc.build(p, k)
    assert sym_moment(field, n, method="cyclotomic") == sym_moment(field, n, method="modular")


# Salie: sum_a Kl(a)**2 = p**2 - p - 1 and sum_a Kl(a)**4 = 2p**3 - 3p**2 - 3p - 1 over F_p
@pytest.mark.parametrize("p", [3, 7, 211, 1009, 10007])
def test_prime_field_moments(p: int):
    field = FieldDesc.build(p)
    assert sym_moment(field, 2) == -1
    assert sym_moment(field, 4) == -(p**2 + 1)


@pytest.mark.slow
def test_largest_prime_field():
    assert sym_moment(FieldDesc.build(999983), 2) == -1


def test_floating_path_refuses_large_fields():
    with pytest.raises(NonIntegerCollapseError):
        sym_moment_fast(FieldDesc.build(10007), 4)


def test_residue_primes():
    primes = list(itertools.islice(residue_primes(211), 5))
    assert primes == sorted(primes, reverse=True)
    assert all(ell % 211 == 1 and ell < 2**27 for ell in primes)


def test_cyclic_square_mod():
    ell = next(residue_primes(5))
    values = np.random.default_rng(7).integers(0, ell, size=23)
    expected = [sum(int(values[i]) * int(values[(j - i) % 23]) for i in range(23)) % ell for j in range(23)]
    assert cyclic_square_mod(values, ell).tolist() == expected


def test_sym_moment_domain():
    with pytest.raises(DomainError):
        sym_moment(FieldDesc.build(3), -1)


@pytest.mark.parametrize(["p", "k"], [(3, 3), (7, 1), (2, 5)])
def test_weil_bound(p: int, k: int):
    assert weil_bound_violations(FieldDesc.build(p, k)) == []


def test_power_sums(ctx: PrecisionContext):
    field = FieldDesc.build(7)
    for a in (1, 3):
        assert power_sum_residual(field, a, 5, ctx) < ctx.tolerance * 100


def test_local_factor():
    assert local_factor([Fraction(2)], 2) == (1, -2, 2)
    assert local_factor([Fraction(0), Fraction(0)], 2) == (1, 0, 0)


def test_local_data():
    data = local_data(3, 1, 2)
    assert data.degree == 2
    assert data.moments == (-1, -1)
    assert data.coefficients == (0, 0)
    assert data.zeta == (1, 0, 0)
    assert local_data_csv([data]) == "p,k,n,S_n,c_num,c_den\n3,1,1,-1,0,1\n3,2,1,-1,0,1\n"
    with pytest.raises(DomainError):
        local_data(4, 1, 1)


def test_coefficient_match():
    rows = coeff_match(5, [7, 11, 13])
    assert [row.p for row in rows] == [7, 11, 13]
    assert all(row.matched for row in rows)
    with pytest.raises(DomainError):
        coeff_match(7, [2])
    with pytest.raises(DomainError):
        coeff_match(5, [3])


def test_zeta71_bound(ctx: PrecisionContext):
    with pytest.raises(DomainError):
        zeta71_estimate(10, ctx)
