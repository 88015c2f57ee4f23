from __future__ import annotations

from typing import Callable

from ...modular import NEWFORMS
from ...mpcore import MPReal, PrecisionContext
from .base import ZERO, Expression, IdentityEntry, ikm, op, scaled, value


def _ikm_equals_l(
    id: str,
    moment: tuple[int, int, int],
    form: str,
    s: int,
    text: str,
    factor: Callable[[PrecisionContext], MPReal],
) -> IdentityEntry:
    a, b, n = moment
    return IdentityEntry(
        id,
        "theorem",
        "lvalues",
        value("ikm", f"IKM({a},{b};{n})", a=a, b=b, n=n),
        scaled(f"{text} L({form}, {s})", factor, op("lvalue", form=form, s=s)),
        "full",
        f"IKM({a},{b};{n}) = {text} L({form}, {s})",
    )


def _sunrise() -> list[IdentityEntry]:
    return [
        _ikm_equals_l("T3-L1", (1, 4, 1), "F3_15", 1, "pi^2/5", lambda ctx: ctx.mp.pi**2 / 5),
        _ikm_equals_l(
            "T3-L2", (1, 4, 1), "F3_15", 2, "3 pi/(2 sqrt(15))", lambda ctx: 3 * ctx.mp.pi / (2 * ctx.mp.sqrt(15))
        ),
        _ikm_equals_l("T3-ikm231-L2", (2, 3, 1), "F3_15", 2, "3/4", lambda ctx: ctx.mpf(3) / 4),
        _ikm_equals_l(
            "T3-ikm231-L1",
            (2, 3, 1),
            "F3_15",
            1,
            "3 pi/(2 sqrt(15))",
            lambda ctx: 3 * ctx.mp.pi / (2 * ctx.mp.sqrt(15)),
        ),
    ]


def _critical() -> list[IdentityEntry]:
    return [
        _ikm_equals_l("T4a-1", (3, 3, 1), "F4_6", 2, "3/2", lambda ctx: ctx.mpf(3) / 2),
        IdentityEntry(
            "T4a-2",
            "theorem",
            "lvalues",
            scaled("(3/pi^2) IKM(1,5;1)", lambda ctx: 3 / ctx.mp.pi**2, ikm(1, 5, 1)),
            value("ikm", "IKM(3,3;1)", a=3, b=3, n=1),
            "full",
            "(3/pi^2) IKM(1,5;1) = IKM(3,3;1)",
        ),
        _ikm_equals_l("T4a-3", (2, 4, 1), "F4_6", 1, "pi^2/2", lambda ctx: ctx.mp.pi**2 / 2),
        _ikm_equals_l("T4a-4", (2, 4, 1), "F4_6", 3, "3/2", lambda ctx: ctx.mpf(3) / 2),
        _ikm_equals_l("T4b-1", (4, 4, 1), "F6_6", 3, "1", lambda ctx: ctx.mpf(1)),
        _ikm_equals_l("T4b-2", (3, 5, 1), "F6_6", 4, "9/4", lambda ctx: ctx.mpf(9) / 4),
        IdentityEntry(
            "T4b-3",
            "theorem",
            "lvalues",
            scaled("IKM(1,7;1)/pi^2", lambda ctx: 1 / ctx.mp.pi**2, ikm(1, 7, 1)),
            value("ikm", "IKM(3,5;1)", a=3, b=5, n=1),
            "full",
            "IKM(1,7;1)/pi^2 = IKM(3,5;1)",
        ),
        _ikm_equals_l("T4b-4", (2, 6, 1), "F6_6", 5, "27/4", lambda ctx: ctx.mpf(27) / 4),
        IdentityEntry(
            "T4-ratio",
            "theorem",
            "lvalues",
            Expression(
                "L(F6_6, 5)/L(F6_6, 3)",
                (op("lvalue", form="F6_6", s=5), op("lvalue", form="F6_6", s=3)),
                lambda ctx, five, three: five / three,
            ),
            Expression("2 pi^2/21", (), lambda ctx: 2 * ctx.mp.pi**2 / 21),
            "full",
            "L(f_{6,6}, 5)/L(f_{6,6}, 3) = 2 pi^2/21",
        ),
        IdentityEntry(
            "T4-sumrule",
            "theorem",
            "lvalues",
            scaled("9 pi^2 IKM(4,4;1)", lambda ctx: 9 * ctx.mp.pi**2, ikm(4, 4, 1)),
            scaled("14 IKM(2,6;1)", lambda ctx: 14, ikm(2, 6, 1)),
            "full",
            "9 pi^2 IKM(4,4;1) = 14 IKM(2,6;1)",
        ),
    ]


def _reflections() -> list[IdentityEntry]:
    return [
        IdentityEntry(
            f"T4-refl-{form}-s{s}",
            "theorem",
            "lvalues",
            value("lambda_reflection", f"Lambda({form}, {s}) - Lambda({form}, {newform.weight - s})", form=form, s=s),
            ZERO,
            "full",
            f"The completed L-function of {form} is symmetric under s -> {newform.weight} - s",
        )
        for form, newform in NEWFORMS.items()
        for s in range(1, newform.weight)
        if 2 * s != newform.weight
    ]


def entries() -> list[IdentityEntry]:
    return _sunrise() + _critical() + _reflections()
