from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Sequence, Union

from .._compat import Self
from ..exceptions import NonIntegerCollapseError
from ..mpcore import MPComplex, PrecisionContext


@dataclass(frozen=True)
class CycloInt:
    """An element of `Z[zeta_p]` in the basis `1, zeta, ..., zeta**(p-2)`.

    `zeta**(p-1) = -(1 + zeta + ... + zeta**(p-2))`, so rational integers are `(n, 0, ..., 0)`.
    """

    p: int
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != self.p - 1:
            raise ValueError(f"Expected {self.p - 1} coordinates for p={self.p}, got {len(self.coords)}.")

    @classmethod
    def from_int(cls, p: int, n: int) -> Self:
        return cls(p, (n,) + (0,) * (p - 2))

    @classmethod
    def from_powers(cls, p: int, counts: Sequence[int]) -> Self:
        """`sum_c counts[c] zeta**c` for `c = 0..p-1`."""
        if len(counts) != p:
            raise ValueError(f"Expected {p} counts, got {len(counts)}.")
        top = counts[p - 1]
        return cls(p, tuple(int(counts[c]) - int(top) for c in range(p - 1)))

    def _coerce(self, other: Union[CycloInt, int]) -> CycloInt:
        if isinstance(other, int):
            return CycloInt.from_int(self.p, other)
        if other.p != self.p:
            raise ValueError(f"Cannot combine elements of Z[zeta_{self.p}] and Z[zeta_{other.p}].")
        return other

    def __add__(self, other: Union[CycloInt, int]) -> CycloInt:
        other = self._coerce(other)
        return CycloInt(self.p, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self) -> CycloInt:
        return CycloInt(self.p, tuple(-a for a in self.coords))

    def __sub__(self, other: Union[CycloInt, int]) -> CycloInt:
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> CycloInt:
        return self._coerce(other) - self

    def __mul__(self, other: Union[CycloInt, int]) -> CycloInt:
        if isinstance(other, int):
            return CycloInt(self.p, tuple(other * a for a in self.coords))
        other = self._coerce(other)
        p = self.p
        # product in Z[x]/(x**p - 1), then reduce the zeta**(p-1) coefficient
        full = [0] * p
        for i, a in enumerate(self.coords):
            if a == 0:
                continue
            for j, b in enumerate(other.coords):
                if b:
                    full[(i + j) % p] += a * b
        top = full[p - 1]
        return CycloInt(p, tuple(c - top for c in full[: p - 1]))

    __rmul__ = __mul__

    @property
    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def to_int(self) -> int:
        """The rational integer this element equals, or `NonIntegerCollapseError`."""
        if not self.is_rational:
            raise NonIntegerCollapseError(f"Cyclotomic integer {self.coords[:8]}... is not a rational integer.")
        return self.coords[0]

    def embed(self) -> complex:
        """The complex value under `zeta -> exp(2 pi i / p)`."""
        zeta = cmath.exp(2j * cmath.pi / self.p)
        return sum((a * zeta**i for i, a in enumerate(self.coords) if a), 0j)

    def evaluate(self, ctx: PrecisionContext) -> MPComplex:
        """`embed` at the working precision of `ctx`."""
        mp = ctx.mp
        return mp.fsum(a * mp.expjpi(mp.mpf(2 * i) / self.p) for i, a in enumerate(self.coords) if a)
