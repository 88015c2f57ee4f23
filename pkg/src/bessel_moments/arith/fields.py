"""Finite fields `F_q`, `q = p**k`, as `F_p[x]` modulo a monic irreducible polynomial.

An element `d_0 + d_1 x + ... + d_{k-1} x**(k-1)` is encoded as the integer `sum d_i p**i`. Multiplication goes
through discrete logarithm tables built from a primitive element; traces are `F_p`-linear, so they are tabulated
on the basis and extended to every element at once.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Optional

import numpy as np
import numpy.typing as npt
import sympy

from .._compat import Self

logger = logging.getLogger(__name__)

_x = sympy.Symbol("x")


def is_irreducible(p: int, modulus: tuple[int, ...]) -> bool:
    """Whether the polynomial with coefficients `modulus` (constant term first) is irreducible over `F_p`."""
    return sympy.Poly(list(reversed(modulus)), _x, modulus=p).is_irreducible


def irreducible_moduli(p: int, k: int) -> Iterator[tuple[int, ...]]:
    """Monic irreducible polynomials of degree `k` over `F_p`, constant term first.

    They come in lexicographic order of `(c_{k-1}, ..., c_0)`.
    """
    if not sympy.isprime(p):
        raise ValueError(f"The characteristic must be prime, got {p}.")
    if k < 1:
        raise ValueError(f"The extension degree must be positive, got {k}.")
    for high_to_low in itertools.product(range(p), repeat=k):
        modulus = tuple(reversed(high_to_low)) + (1,)
        if is_irreducible(p, modulus):
            yield modulus


@dataclass(frozen=True)
class FieldDesc:
    p: int
    k: int
    modulus: tuple[int, ...]
    """Monic, constant term first, of degree `k`."""

    _tables: dict[str, npt.NDArray[np.int64]] = field(default_factory=dict, compare=False, hash=False, repr=False)

    @classmethod
    def build(cls, p: int, k: int = 1, modulus: Optional[tuple[int, ...]] = None) -> Self:
        """The field of `p**k` elements over the given modulus, by default the lexicographically least one."""
        if modulus is None:
            modulus = next(irreducible_moduli(p, k))
        elif len(modulus) != k + 1 or modulus[-1] != 1 or not is_irreducible(p, modulus):
            raise ValueError(f"{modulus} is not a monic irreducible polynomial of degree {k} over F_{p}.")
        return cls(p, k, tuple(modulus))

    @property
    def q(self) -> int:
        return self.p**self.k

    def __str__(self) -> str:
        return f"F_{self.p}^{self.k}" if self.k > 1 else f"F_{self.p}"

    def digits(self, element: int) -> list[int]:
        return [(element // self.p**i) % self.p for i in range(self.k)]

    def from_digits(self, digits: list[int]) -> int:
        return sum((d % self.p) * self.p**i for i, d in enumerate(digits))

    def add(self, a: int, b: int) -> int:
        return self.from_digits([x + y for x, y in zip(self.digits(a), self.digits(b))])

    def multiply(self, a: int, b: int) -> int:
        """Schoolbook product reduced modulo `modulus`."""
        p, k = self.p, self.k
        product = [0] * (2 * k - 1)
        for i, x in enumerate(self.digits(a)):
            for j, y in enumerate(self.digits(b)):
                product[i + j] = (product[i + j] + x * y) % p
        for degree in range(2 * k - 2, k - 1, -1):
            coefficient = product[degree]
            if coefficient:
                for i in range(k + 1):
                    product[degree - k + i] = (product[degree - k + i] - coefficient * self.modulus[i]) % p
        return self.from_digits(product[:k])

    def power(self, a: int, exponent: int) -> int:
        result, base = 1, a
        while exponent:
            if exponent & 1:
                result = self.multiply(result, base)
            base = self.multiply(base, base)
            exponent >>= 1
        return result

    @cached_property
    def generator(self) -> int:
        """The least primitive element."""
        order = self.q - 1
        factors = sympy.primefactors(order)
        for candidate in range(2 if self.q > 2 else 1, self.q):
            if all(self.power(candidate, order // r) != 1 for r in factors):
                return candidate
        raise ArithmeticError(f"No primitive element found in {self}.")

    def _build_tables(self) -> None:
        q = self.q
        exp = np.zeros(q - 1, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        value = 1
        for i in range(q - 1):
            exp[i] = value
            log[value] = i
            value = self.multiply(value, self.generator)
        if value != 1 or (log[1:] < 0).any():
            raise ArithmeticError(f"{self.generator} does not generate {self}.")

        # Tr(z) = z + z**p + ... + z**(p**(k-1)), tabulated on the basis x**i
        basis_traces = []
        for i in range(self.k):
            z = self.p**i
            total = 0
            for j in range(self.k):
                total = self.add(total, int(exp[(int(log[z]) * self.p**j) % (q - 1)]))
            if total >= self.p:
                raise ArithmeticError(f"Trace of x^{i} in {self} is not in the prime field.")
            basis_traces.append(total)
        elements = np.arange(q, dtype=np.int64)
        trace = np.zeros(q, dtype=np.int64)
        for i, t in enumerate(basis_traces):
            trace += ((elements // self.p**i) % self.p) * t
        trace %= self.p

        self._tables.update(exp=exp, log=log, trace=trace, trace_by_log=trace[exp])

    def table(self, name: str) -> npt.NDArray[np.int64]:
        """`exp` (by discrete log), `log` (by element, `-1` at zero), `trace` (by element) or `trace_by_log`."""
        if not self._tables:
            self._build_tables()
        return self._tables[name]

    def log(self, element: int) -> int:
        if element == 0 or not 0 < element < self.q:
            raise ValueError(f"{element} is not a nonzero element of {self}.")
        return int(self.table("log")[element])

    def trace(self, element: int) -> int:
        return int(self.table("trace")[element])

    def divide(self, a: int, b: int) -> int:
        log_b = self.log(b)
        if a == 0:
            return 0
        return int(self.table("exp")[(self.log(a) - log_b) % (self.q - 1)])


def prime_power_fields(bound: int) -> Iterator[FieldDesc]:
    """Every field `F_{p**k}` with `p**k <= bound`, by increasing `p` then `k`."""
    for p in sympy.primerange(2, bound + 1):
        k = 1
        while p**k <= bound:
            yield FieldDesc.build(p, k)
            k += 1
