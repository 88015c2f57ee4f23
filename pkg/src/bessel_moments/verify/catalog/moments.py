from __future__ import annotations

from ...moments import valid_sum_rules
from .base import ZERO, Expression, IdentityEntry, constant, determinant, ikm, jym, op, scaled, value


def _closed_values() -> list[IdentityEntry]:
    return [
        IdentityEntry(
            "CLOSED-ikm121",
            "theorem",
            "moments",
            value("ikm", a=1, b=2, n=1),
            constant("pi/(3 sqrt(3))", lambda ctx: ctx.mp.pi / (3 * ctx.mp.sqrt(3))),
            "full",
            "IKM(1,2;1) = pi/(3 sqrt 3)",
        ),
        IdentityEntry(
            "CLOSED-ikm131",
            "theorem",
            "moments",
            value("ikm", a=1, b=3, n=1),
            constant("pi^2/16", lambda ctx: ctx.mp.pi**2 / 16),
            "full",
            "IKM(1,3;1) = pi^2/16",
        ),
        IdentityEntry(
            "T3-ikm231",
            "theorem",
            "moments",
            value("ikm", a=2, b=3, n=1),
            scaled(
                "(sqrt(15) pi/2) C",
                lambda ctx: ctx.mp.sqrt(15) * ctx.mp.pi / 2,
                op("closed_constant", id="BolognaC"),
            ),
            "full",
            "IKM(2,3;1) equals sqrt(15) pi/2 times the Bologna constant",
        ),
        IdentityEntry(
            "T3-ikm141",
            "theorem",
            "moments",
            value("ikm", a=1, b=4, n=1),
            scaled("pi^2 C", lambda ctx: ctx.mp.pi**2, op("closed_constant", id="BolognaC")),
            "full",
            "The 3-loop sunrise IKM(1,4;1) equals pi^2 times the Bologna constant",
        ),
    ]


def _sum_rules() -> list[IdentityEntry]:
    return [
        IdentityEntry(
            f"T1a-{variant}-m{m}-n{n}",
            "theorem",
            "moments",
            value("sum_rule_residual", variant=variant, m=m, n=n),
            ZERO,
            "full",
            f"The {variant} combination of ([pi I0 + i K0]^{m} and [pi I0 - i K0]^{m}) K0^{m} t^{n} integrates to 0",
        )
        for variant, m, n in valid_sum_rules(5)
    ]


def _crandall() -> list[IdentityEntry]:
    entries = [
        IdentityEntry(
            f"T1b-crandall-m{m}-n{n}",
            "theorem",
            "moments",
            value("crandall_numeric", m=m, n=n),
            value("crandall_exact", m=m, n=n),
            "full",
            f"C({m},{n}) from Bessel moments equals its value from the Hankel asymptotic expansion",
        )
        for m in range(1, 5)
        for n in range(1, 4)
    ]
    entries += [
        IdentityEntry(
            f"T1b-A{n}",
            "cross_check",
            "moments",
            value("crandall_a", n=n),
            value("crandall_a_exact", n=n),
            "full",
            f"The Crandall number A({n}) from Bessel moments equals its exact value",
        )
        for n in range(1, 4)
    ]
    entries += [
        IdentityEntry(
            "T1b-integrality",
            "theorem",
            "moments",
            value("crandall_non_integers", max_m=6, max_n=6),
            ZERO,
            "full",
            "C(m,n) evaluates to a positive integer for m, n <= 6",
        ),
        IdentityEntry(
            "T1b-rogers",
            "theorem",
            "moments",
            value("rogers_mismatch", L=6),
            ZERO,
            "full",
            "Rogers' generating function of C(2, l) holds through u^6",
        ),
        IdentityEntry(
            "T1b-convolution",
            "cross_check",
            "moments",
            value("crandall_convolution", m1=2, m2=3, N=12),
            ZERO,
            "full",
            "Hankel product series multiply: S(2) S(3) = S(5)",
        ),
    ]
    return entries


def _determinants() -> list[IdentityEntry]:
    entries = []
    for kind in ("M", "N"):
        for k in range(1, 5):
            entries.append(
                IdentityEntry(
                    f"T2-det{kind}{k}",
                    "theorem",
                    "moments",
                    value("det_numeric", f"det {kind}_{k}", kind=kind, k=k),
                    value("closed_constant", f"det{kind}({k})", id=f"det{kind}({k})"),
                    "full",
                    f"The determinant of the {k}x{k} odd-moment matrix {kind}_{k} has a closed form",
                )
            )
    for kind, name in (("M", "det_m_recurrence"), ("N", "det_n_recurrence")):
        for k in range(2, 5):
            entries.append(
                IdentityEntry(
                    f"T2-rec{kind}{k}",
                    "theorem",
                    "moments",
                    value(name, k=k),
                    ZERO,
                    "full",
                    f"The closed forms of det {kind}_{k - 1} and det {kind}_{k} satisfy the Wronskian recurrence",
                )
            )
    return entries


def _wick() -> list[IdentityEntry]:
    return [
        IdentityEntry(
            "W1-ikm-jym",
            "theorem",
            "moments",
            Expression(
                "-JYM(5,0;1) + 6 JYM(3,2;1) - JYM(1,4;1)",
                (jym(5, 0, 1), jym(3, 2, 1), jym(1, 4, 1)),
                lambda ctx, a, b, c: -a + 6 * b - c,
            ),
            scaled("(2/pi)^4 IKM(1,4;1)", lambda ctx: (2 / ctx.mp.pi) ** 4, ikm(1, 4, 1)),
            "oscillatory",
            "Wick rotation turns IKM(1,4;1) into a combination of JYM moments",
        ),
        IdentityEntry(
            "W2-jym501",
            "theorem",
            "moments",
            value("ikm", a=1, b=4, n=1),
            scaled("(pi^4/30) JYM(5,0;1)", lambda ctx: ctx.mp.pi**4 / 30, jym(5, 0, 1)),
            "oscillatory",
            "IKM(1,4;1) = (pi^4/30) JYM(5,0;1)",
        ),
        IdentityEntry(
            "W3-jym601",
            "theorem",
            "moments",
            value("ikm", a=2, b=4, n=1),
            scaled("(pi^4/30) JYM(6,0;1)", lambda ctx: ctx.mp.pi**4 / 30, jym(6, 0, 1)),
            "oscillatory",
            "IKM(2,4;1) = (pi^4/30) JYM(6,0;1)",
        ),
        IdentityEntry(
            "W4-cancel-114",
            "theorem",
            "moments",
            value("jym_cancelation", ell=1, m=1, n=4),
            ZERO,
            "oscillatory",
            "int J0 {(J0 + i Y0)^4 - (-J0 + i Y0)^4} x dx vanishes",
        ),
        IdentityEntry(
            "W5-cancel-105",
            "theorem",
            "moments",
            value("jym_cancelation", ell=1, m=0, n=5),
            ZERO,
            "oscillatory",
            "int {(J0 + i Y0)^5 - (-J0 + i Y0)^5} x dx vanishes",
        ),
        IdentityEntry(
            "W-laporta",
            "theorem",
            "moments",
            value("laporta_residual"),
            ZERO,
            "full",
            "int I0 K0^5 t^3 dt = (pi^2/3) int I0 K0 (I0^2 K0^2 - 1/(4t^2)) t^3 dt",
        ),
    ]


def _n3() -> list[IdentityEntry]:
    entries = [
        IdentityEntry(
            "N3-identity",
            "theorem",
            "moments",
            value("n3_reduced_determinant", "(pi^2/2^8) det of the Crandall-reduced 2x2 matrix"),
            value("n3_closed", "5 pi^8/(2^19 3)"),
            "full",
            "det N_3 reduces by the Crandall relations to a 2x2 determinant equal to 5 pi^8/(2^19 3)",
        )
    ]
    entries += [
        IdentityEntry(
            f"N3-crandall-{j}",
            "theorem",
            "moments",
            value("crandall_relation", j=j),
            ZERO,
            "full",
            f"IKM(3,5;{2 * j - 1}) - IKM(1,7;{2 * j - 1})/pi^2 takes its Crandall value",
        )
        for j in range(1, 4)
    ]
    return entries


def _conjectures() -> list[IdentityEntry]:
    return [
        IdentityEntry(
            "CONJ1-f315",
            "conjecture",
            "moments",
            determinant("det [[IKM(0,5;1), IKM(0,5;3)], [IKM(2,3;1), IKM(2,3;3)]]", *_rows(5, 2)),
            scaled("45/(8 pi^2) L(f_{3,15}, 4)", lambda ctx: 45 / (8 * ctx.mp.pi**2), op("lvalue", form="F3_15", s=4)),
            "full",
            "A 2x2 determinant of 5-Bessel moments is a non-critical L-value of f_{3,15}",
        ),
        IdentityEntry(
            "CONJ1-f46",
            "conjecture",
            "moments",
            determinant("det [[IKM(0,6;1), IKM(0,6;3)], [IKM(2,4;1), IKM(2,4;3)]]", *_rows(6, 2)),
            scaled("27/(4 pi^2) L(f_{4,6}, 5)", lambda ctx: 27 / (4 * ctx.mp.pi**2), op("lvalue", form="F4_6", s=5)),
            "full",
            "A 2x2 determinant of 6-Bessel moments is a non-critical L-value of f_{4,6}",
        ),
        IdentityEntry(
            "CONJ1-f66",
            "conjecture",
            "moments",
            Expression(
                "det [[IKM(0,8;1), IKM(0,8;3) - 2 IKM(0,8;5)], [IKM(2,6;1), IKM(2,6;3) - 2 IKM(2,6;5)]]",
                (ikm(0, 8, 1), ikm(0, 8, 3), ikm(0, 8, 5), ikm(2, 6, 1), ikm(2, 6, 3), ikm(2, 6, 5)),
                lambda ctx, a1, a3, a5, b1, b3, b5: a1 * (b3 - 2 * b5) - (a3 - 2 * a5) * b1,
            ),
            scaled(
                "6075/(128 pi^2) L(f_{6,6}, 7)",
                lambda ctx: 6075 / (128 * ctx.mp.pi**2),
                op("lvalue", form="F6_6", s=7),
            ),
            "full",
            "A reduced 2x2 determinant of 8-Bessel moments is a non-critical L-value of f_{6,6}",
        ),
    ]


def _rows(total: int, a: int) -> tuple:
    return ikm(0, total, 1), ikm(0, total, 3), ikm(a, total - a, 1), ikm(a, total - a, 3)


def entries() -> list[IdentityEntry]:
    return _closed_values() + _sum_rules() + _crandall() + _determinants() + _wick() + _n3() + _conjectures()
