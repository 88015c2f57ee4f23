from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Optional, Union

from ...mpcore import PrecisionContext
from ...typing import IdentityKindT, ToleranceClassT
from ..operations import Value, get_operation

Param = Union[int, str, Fraction]
Combine = Callable[..., Value]
"""`combine(ctx, *operand_values)`."""


@dataclass(frozen=True)
class Operand:
    """One call of a named operation."""

    op: str
    params: tuple[tuple[str, Param], ...] = ()

    def __post_init__(self) -> None:
        get_operation(self.op)

    @property
    def kwargs(self) -> dict[str, Any]:
        return dict(self.params)

    def key(self, digits: int, schema: int) -> str:
        """`v<schema>:<operation>:<k=v,...>:d<digits>`, parameters sorted by name."""
        rendered = ",".join(f"{name}={value}" for name, value in sorted(self.params))
        return f"v{schema}:{self.op}:{rendered}:d{digits}"

    def __str__(self) -> str:
        return f"{self.op}({', '.join(f'{name}={value}' for name, value in self.params)})"


def _identity(ctx: PrecisionContext, value: Value) -> Value:
    return value


@dataclass(frozen=True)
class Expression:
    """A side of an identity: operand values combined by a closed formula."""

    text: str
    operands: tuple[Operand, ...] = ()
    combine: Combine = field(default=_identity, compare=False)


@dataclass(frozen=True)
class IdentityEntry:
    id: str
    kind: IdentityKindT
    group: str
    """`moments`, `lvalues`, `modular`, `vanhove` or `kloosterman`; the `kloosterman` group forms its own suite."""

    lhs: Expression
    rhs: Expression
    tolerance_class: ToleranceClassT
    reference: str
    """The statement being checked, in words."""

    uncertainty: Optional[Expression] = None
    """Experimental entries only: the reported uncertainty of `lhs`."""

    def __post_init__(self) -> None:
        if self.kind == "theorem" and self.tolerance_class == "experimental":
            raise ValueError(f"Theorem {self.id} cannot use the experimental tolerance class.")

    @property
    def operands(self) -> tuple[Operand, ...]:
        operands = self.lhs.operands + self.rhs.operands
        return operands + (self.uncertainty.operands if self.uncertainty is not None else ())


def op(name: str, **params: Param) -> Operand:
    return Operand(name, tuple(params.items()))


def value(name: str, text: Optional[str] = None, **params: Param) -> Expression:
    operand = op(name, **params)
    return Expression(text or str(operand), (operand,))


def ikm(a: int, b: int, n: int) -> Operand:
    return op("ikm", a=a, b=b, n=n)


def jym(alpha: int, beta: int, n: int) -> Operand:
    return op("jym", alpha=alpha, beta=beta, n=n)


def constant(text: str, func: Callable[[PrecisionContext], Value]) -> Expression:
    """A closed form with no operands."""
    return Expression(text, (), lambda ctx: func(ctx))


ZERO = constant("0", lambda ctx: 0)


def scaled(text: str, factor: Callable[[PrecisionContext], Value], operand: Operand) -> Expression:
    """`factor(ctx) * operand`."""
    return Expression(text, (operand,), lambda ctx, v: factor(ctx) * v)


def determinant(text: str, a: Operand, b: Operand, c: Operand, d: Operand) -> Expression:
    """`det [[a, b], [c, d]]`."""
    return Expression(text, (a, b, c, d), lambda ctx, va, vb, vc, vd: va * vd - vb * vc)
