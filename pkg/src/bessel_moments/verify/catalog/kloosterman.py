from __future__ import annotations

from .base import ZERO, Expression, IdentityEntry, constant, op, value

FIRST_MOMENT_FIELDS = ((2, 1), (3, 1), (5, 1), (7, 1), (11, 1), (13, 1), (2, 2), (3, 2), (5, 2), (2, 3))


def _first_moments() -> list[IdentityEntry]:
    return [
        IdentityEntry(
            f"K1-S1-{p}^{k}",
            "theorem",
            "kloosterman",
            value("sym_moment", f"S_1({p}^{k})", p=p, k=k, n=1),
            constant("-1", lambda ctx: -1),
            "full",
            "Kloosterman sums add up to 1 over the nonzero elements, so S_1(q) = -1 and c_1(q) = 0",
        )
        for p, k in FIRST_MOMENT_FIELDS
    ]


def _checks() -> list[IdentityEntry]:
    return [
        IdentityEntry(
            "K2-weil",
            "theorem",
            "kloosterman",
            value("weil_violations", "sums with |Kl_2| > 2 sqrt(q) over all fields of size <= 128", bound=128),
            ZERO,
            "full",
            "|Kl_2(F_q, a)| <= 2 sqrt(q)",
        ),
        IdentityEntry(
            "K3-c5",
            "theorem",
            "kloosterman",
            value("coeff_mismatches", "good primes p <= 50 with c_5(p) != A_p(f_{3,15})", n=5, bound=50),
            ZERO,
            "full",
            "zeta_{5,1}(s) = L(f_{3,15}, s) at good primes",
        ),
        IdentityEntry(
            "K3-c6",
            "theorem",
            "kloosterman",
            value("coeff_mismatches", "good primes p <= 50 with c_6(p) != A_p(f_{4,6})", n=6, bound=50),
            ZERO,
            "full",
            "zeta_{6,1}(s) = L(f_{4,6}, s) at good primes",
        ),
        IdentityEntry(
            "K4-galois-3",
            "cross_check",
            "kloosterman",
            value("galois_gap", "S_5(9) over two moduli", p=3, n=5),
            ZERO,
            "full",
            "S_n(q) does not depend on the modulus chosen for F_q",
        ),
        IdentityEntry(
            "K4-galois-5",
            "cross_check",
            "kloosterman",
            value("galois_gap", "S_4(25) over two moduli", p=5, n=4),
            ZERO,
            "full",
            "S_n(q) does not depend on the modulus chosen for F_q",
        ),
        IdentityEntry(
            "K4-power-sum",
            "cross_check",
            "kloosterman",
            value("power_sum_max", "largest gap between s_n by recurrence and by Frobenius roots", samples=20, seed=71),
            ZERO,
            "full",
            "The symmetric power recurrence reproduces sum_j alpha^j beta^(n-j)",
        ),
    ]


def _zeta71(prime_bound: int) -> list[IdentityEntry]:
    return [
        IdentityEntry(
            "CONJ2-zeta71",
            "conjecture",
            "kloosterman",
            value("zeta71_estimate", f"smoothed zeta_{{7,1}}(2), primes <= {prime_bound}", prime_bound=prime_bound),
            Expression("24 IKM(2,5;1)/(5 pi^2)", (op("zeta71_target"),)),
            "experimental",
            "IKM(2,5;1) = (5 pi^2/24) zeta_{7,1}(2)",
            uncertainty=value("zeta71_uncertainty", prime_bound=prime_bound),
        )
    ]


def entries(zeta71_prime_bound: int = 2000) -> list[IdentityEntry]:
    return _first_moments() + _checks() + _zeta71(zeta71_prime_bound)
