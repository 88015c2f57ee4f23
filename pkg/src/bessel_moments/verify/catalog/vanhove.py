from __future__ import annotations

from fractions import Fraction

from ...vanhove import annihilated_integrals
from .base import ZERO, IdentityEntry, value

WRONSKIAN_POINTS = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1))


def _operators() -> list[IdentityEntry]:
    return [
        IdentityEntry(
            "V-leading-terms",
            "cross_check",
            "vanhove",
            value("operator_mismatches", "orders 2..4 with inconsistent leading coefficients", max_n=4),
            ZERO,
            "full",
            "The two leading coefficients of the tabulated operators follow m_n(u) and n_n(u)",
        )
    ]


def _annihilation() -> list[IdentityEntry]:
    entries = [
        IdentityEntry(
            f"V1-annihilate-n{n}-{index}",
            "theorem",
            "vanhove",
            value("annihilation_max", f"max |L_{n} F| over the u grid, integral #{index}", n=n, index=index),
            ZERO,
            "fd_degraded",
            f"The order {n} Vanhove operator annihilates its homogeneous Bessel integrals",
        )
        for n in range(1, 5)
        for index in range(len(annihilated_integrals(n)))
    ]
    entries += [
        IdentityEntry(
            f"V2-constancy-n{n}",
            "theorem",
            "vanhove",
            value("constancy_spread", f"spread of L_{n} int I0(sqrt(u) t) K0^{n + 1} t dt over the u grid", n=n),
            ZERO,
            "fd_degraded",
            f"The order {n} Vanhove operator maps int I0(sqrt(u) t) K0^{n + 1} t dt to a constant",
        )
        for n in range(1, 5)
    ]
    return entries


def _wronskians(include_k3: bool) -> list[IdentityEntry]:
    entries = [
        IdentityEntry(
            f"V3-omega3-u{u}",
            "theorem",
            "vanhove",
            value("wronskian_numeric", f"Omega_3({u})", k=2, u=u),
            value("wronskian_closed", f"closed Omega_3({u})", k=2, u=u),
            "fd_degraded",
            "The Wronskian of the mu_{2,j} family has a closed form",
        )
        for u in WRONSKIAN_POINTS
    ]
    entries += [
        IdentityEntry(
            "V3-factorization",
            "theorem",
            "vanhove",
            value("wronskian_closed", "closed Omega_3(1)", k=2, u=Fraction(1)),
            value("wronskian_at_one", "det M_1 det M_2 / 2^3", k=2),
            "full",
            "Omega_3(1) factorizes into det M_1 det M_2 / 2^3",
        ),
        IdentityEntry(
            "V3-evolution-mu",
            "theorem",
            "vanhove",
            value(
                "evolution_residual",
                "relative residual of the Omega_3 evolution equation",
                kind="mu",
                k=2,
                u=Fraction(1, 2),
            ),
            ZERO,
            "fd_degraded",
            "Omega_3 obeys its first order evolution equation",
        ),
        IdentityEntry(
            "V3-evolution-nu",
            "cross_check",
            "vanhove",
            value(
                "evolution_residual",
                "relative residual of the omega_4 evolution equation",
                kind="nu",
                k=2,
                u=Fraction(1, 2),
            ),
            ZERO,
            "fd_degraded",
            "omega_4 obeys its first order evolution equation",
        ),
    ]
    if include_k3:
        entries += [
            IdentityEntry(
                "V3-omega5-u1/2",
                "cross_check",
                "vanhove",
                value("wronskian_numeric", "Omega_5(1/2)", k=3, u=Fraction(1, 2)),
                value("wronskian_closed", "closed Omega_5(1/2)", k=3, u=Fraction(1, 2)),
                "fd_degraded",
                "The Wronskian of the mu_{3,j} family has a closed form",
            )
        ]
    return entries


def entries(include_k3: bool = False) -> list[IdentityEntry]:
    return _operators() + _annihilation() + _wronskians(include_k3)
