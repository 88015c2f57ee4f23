from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional

from .._compat import Self, TypeAlias
from ..mpcore import MPReal, PrecisionContext, gamma_real
from .crandall import crandall_c1_closed, crandall_c2_closed
from .ikm import ikm

logger = logging.getLogger(__name__)

ClosedConstantNameT: TypeAlias = Literal["BolognaC", "detM", "detN", "C1", "C2"]
MatrixKindT: TypeAlias = Literal["M", "N"]


@dataclass(frozen=True)
class ClosedConstantId:
    """A constant with a closed formula: the Bologna constant, a Broadhurst-Mellit determinant or a Crandall number."""

    name: ClosedConstantNameT
    index: Optional[int] = None

    def __post_init__(self) -> None:
        if self.name == "BolognaC":
            if self.index is not None:
                raise ValueError("The Bologna constant takes no index.")
        elif self.index is None or self.index < 1:
            raise ValueError(f"{self.name} needs a positive index, got {self.index}.")

    @classmethod
    def parse(cls, text: str) -> Self:
        """Parse `BolognaC`, `detM(2)`, `C1(5)` and the like."""
        text = text.strip()
        if "(" not in text:
            return cls(text)  # type: ignore[arg-type]
        name, _, rest = text.partition("(")
        return cls(name, int(rest.rstrip(")")))  # type: ignore[arg-type]

    def __str__(self) -> str:
        return self.name if self.index is None else f"{self.name}({self.index})"


def bologna_constant(ctx: PrecisionContext) -> MPReal:
    """`C = Gamma(1/15) Gamma(2/15) Gamma(4/15) Gamma(8/15) / (240 sqrt(5) pi**2)`."""
    mp = ctx.mp
    product = mp.mpf(1)
    for numerator in (1, 2, 4, 8):
        product *= gamma_real(Fraction(numerator, 15), ctx)
    return product / (240 * mp.sqrt(5) * mp.pi**2)


def det_m_closed(k: int, ctx: PrecisionContext) -> MPReal:
    """`det M_k = prod_{j=1}^k (2j)**(k-j) pi**j / sqrt((2j+1)**(2j+1))`."""
    mp = ctx.mp
    value = mp.mpf(1)
    for j in range(1, k + 1):
        value *= mp.mpf(2 * j) ** (k - j) * mp.pi**j / mp.sqrt(mp.mpf(2 * j + 1) ** (2 * j + 1))
    return value


def det_n_closed(k: int, ctx: PrecisionContext) -> MPReal:
    """`det N_k = 2 pi**((k+1)**2/2) / Gamma((k+1)/2) prod_{j=1}^{k+1} (2j-1)**(k+1-j) / (2j)**j`."""
    mp = ctx.mp
    value = 2 * mp.pi ** (mp.mpf((k + 1) ** 2) / 2) / gamma_real(Fraction(k + 1, 2), ctx)
    for j in range(1, k + 2):
        value *= mp.mpf(2 * j - 1) ** (k + 1 - j) / mp.mpf(2 * j) ** j
    return value


def closed_constant(constant: ClosedConstantId | str, ctx: PrecisionContext) -> MPReal:
    if isinstance(constant, str):
        constant = ClosedConstantId.parse(constant)
    if constant.name == "BolognaC":
        return bologna_constant(ctx)
    assert constant.index is not None
    if constant.name == "detM":
        return det_m_closed(constant.index, ctx)
    if constant.name == "detN":
        return det_n_closed(constant.index, ctx)
    if constant.name == "C1":
        return ctx.mpf(crandall_c1_closed(constant.index))
    if constant.name == "C2":
        return ctx.mpf(crandall_c2_closed(constant.index))
    raise ValueError(f"Unknown closed constant {constant}.")


def broadhurst_mellit_matrix(kind: MatrixKindT, k: int, ctx: PrecisionContext) -> list[list[MPReal]]:
    """The `k x k` matrix of odd moments: `M_k[a][b] = IKM(a, 2k+1-a; 2b-1)`, `N_k[a][b] = IKM(a, 2k+2-a; 2b-1)`."""
    if k < 1:
        raise ValueError(f"Matrix size must be positive, got {k}.")
    total = 2 * k + 1 if kind == "M" else 2 * k + 2
    return [[ikm(a, total - a, 2 * b - 1, ctx) for b in range(1, k + 1)] for a in range(1, k + 1)]


def det_numeric(kind: MatrixKindT, k: int, ctx: PrecisionContext) -> MPReal:
    return ctx.mp.det(ctx.mp.matrix(broadhurst_mellit_matrix(kind, k, ctx)))


CRANDALL_RELATION_VALUES = (Fraction(0), Fraction(1, 2**7), Fraction(1, 2**8))
"""`IKM(3,5;2j-1) - IKM(1,7;2j-1)/pi**2` in units of `pi**2`, for `j = 1, 2, 3`."""


def crandall_relation_residual(j: int, ctx: PrecisionContext) -> MPReal:
    mp = ctx.mp
    if not 1 <= j <= len(CRANDALL_RELATION_VALUES):
        raise ValueError(f"Crandall relations are known for j = 1, 2, 3, got {j}.")
    n = 2 * j - 1
    lhs = ikm(3, 5, n, ctx) - ikm(1, 7, n, ctx) / mp.pi**2
    return lhs - mp.pi**2 * ctx.mpf(CRANDALL_RELATION_VALUES[j - 1])


def n3_reduced_determinant(ctx: PrecisionContext) -> MPReal:
    """`(pi**2/2**8) det [[IKM(1,7;1), IKM(1,7;3) - 2 IKM(1,7;5)], [IKM(2,6;1), IKM(2,6;3) - 2 IKM(2,6;5)]]`.

    Row and column eliminations with the Crandall relations reduce `det N_3` to this `2 x 2` determinant.
    """
    mp = ctx.mp
    rows = [[ikm(a, 8 - a, 1, ctx), ikm(a, 8 - a, 3, ctx) - 2 * ikm(a, 8 - a, 5, ctx)] for a in (1, 2)]
    return mp.pi**2 / 2**8 * (rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0])


def n3_closed(ctx: PrecisionContext) -> MPReal:
    """`det N_3 = 5 pi**8 / (2**19 3)`."""
    return 5 * ctx.mp.pi**8 / (2**19 * 3)
