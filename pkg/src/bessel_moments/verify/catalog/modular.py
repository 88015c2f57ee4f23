from __future__ import annotations

from fractions import Fraction

from ...modular import NEWFORMS
from .base import ZERO, IdentityEntry, value

TRANSFORMATION_POINTS = (
    (Fraction(0), Fraction(2)),
    (Fraction(3, 10), Fraction(11, 10)),
    (Fraction(-2, 5), Fraction(9, 10)),
    (Fraction(1, 2), Fraction(3, 2)),
    (Fraction(1, 10), Fraction(4, 5)),
)

PARAMETRIZATION_HEIGHTS = (Fraction(1, 2), Fraction(1))


def _transformations() -> list[IdentityEntry]:
    return [
        IdentityEntry(
            f"M1-eta-{i}",
            "theorem",
            "modular",
            value("eta_transformation", f"|eta(-1/z) - sqrt(z/i) eta(z)| at z = {re} + {im}i", re=re, im=im),
            ZERO,
            "full",
            "The Dedekind eta function transforms with weight 1/2 under z -> -1/z",
        )
        for i, (re, im) in enumerate(TRANSFORMATION_POINTS, start=1)
    ]


def _series() -> list[IdentityEntry]:
    return [
        IdentityEntry(
            "M2-f66-series",
            "theorem",
            "modular",
            value("f66_mismatch", "first mismatching power of q through q^50", M=50),
            ZERO,
            "full",
            "[Z_{6,3}]^2 q dX_{6,3}/dq = f_{6,6} as exact q-series",
        )
    ]


def _parametrizations() -> list[IdentityEntry]:
    return [
        IdentityEntry(
            f"M3-{id}-y{y}",
            "theorem",
            "modular",
            value("parametrization", f"{id} Hankel transform residual at y = {y}", id=id, y=y),
            ZERO,
            "oscillatory",
            f"The {id} Bessel integral is parametrized by eta quotients",
        )
        for id in ("IKKK", "IIKK", "F46_J", "F46_JY")
        for y in PARAMETRIZATION_HEIGHTS
    ]


def _newforms() -> list[IdentityEntry]:
    entries = [
        IdentityEntry(
            f"M4-refl-{form}",
            "theorem",
            "modular",
            value(
                "reflection_point",
                f"f(i/(N y)) - (sqrt(N) y)^k f(i y) for {form} at y = 1/2",
                form=form,
                y=Fraction(1, 2),
            ),
            ZERO,
            "full",
            f"{form} is an eigenfunction of the Fricke involution",
        )
        for form in NEWFORMS
    ]
    entries += [
        IdentityEntry(
            f"M-hecke-{form}",
            "cross_check",
            "modular",
            value("hecke_failures", f"coprime index pairs <= 50 where A_mn != A_m A_n for {form}", form=form, bound=50),
            ZERO,
            "full",
            f"The coefficients of {form} are multiplicative",
        )
        for form in NEWFORMS
    ]
    entries += [
        IdentityEntry(
            f"M-deligne-{form}",
            "cross_check",
            "modular",
            value("deligne_violations", f"primes <= 100 where |A_p| > 2 p^((k-1)/2) for {form}", form=form, bound=100),
            ZERO,
            "full",
            f"The prime coefficients of {form} respect the Ramanujan-Petersson bound",
        )
        for form in NEWFORMS
    ]
    return entries


def entries() -> list[IdentityEntry]:
    return _transformations() + _series() + _parametrizations() + _newforms()
