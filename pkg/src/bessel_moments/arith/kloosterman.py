"""Kloosterman sums `Kl_2(F_q, a) = sum_x psi(Tr(x + a/x))` and their symmetric power moments `S_n(q)`.

Writing `Kl_2(a) = -(alpha + beta)` with `alpha beta = q`, the symmetric powers `s_n = sum_j alpha**j beta**(n-j)`
follow `s_m = (alpha + beta) s_{m-1} - q s_{m-2}`. Two exact paths carry this recurrence: the `cyclotomic` one in
`Z[zeta_p]`, the `modular` one in residue fields `F_l` with `l = 1 (mod p)`, recombined by the Chinese remainder
theorem. The `fft` path runs it in double precision and is only a cross-check on small fields.
"""

from __future__ import annotations

import logging
import math
from typing import Iterator, Optional

import numpy as np
import numpy.typing as npt
import sympy
from sympy.ntheory.modular import crt

from ..exceptions import DomainError, NonIntegerCollapseError
from ..mpcore import MPReal, PrecisionContext
from ..typing import KloostermanMethodT
from .cyclotomic import CycloInt
from .fields import FieldDesc

logger = logging.getLogger(__name__)

EXACT_MAX_PRIME = 200

MODULAR_PRIME_BITS = 27
"""Residue primes stay below `2**27`, so the product of two residues fits in `int64`."""

LIMB_BITS = 9
"""Residues are convolved in limbs of this many bits, keeping every double precision FFT output below `2**40`."""


def _check_nonzero(field: FieldDesc, a: int) -> None:
    if not 0 < a < field.q:
        raise DomainError(f"{a} is not a nonzero element of {field}.")


def kl2_counts(field: FieldDesc, a: int) -> CycloInt:
    """`Kl_2(a) = sum_c N_a(c) zeta_p**c` with `N_a(c) = #{x != 0 : Tr(x + a/x) = c}`."""
    _check_nonzero(field, a)
    traces = field.table("trace_by_log")
    order = field.q - 1
    j = field.log(a)
    # x = g**i, a/x = g**(j - i)
    shifted = traces[(j - np.arange(order)) % order]
    counts = np.bincount((traces + shifted) % field.p, minlength=field.p)
    return CycloInt.from_powers(field.p, counts.tolist())


def kl2_count_table(field: FieldDesc) -> npt.NDArray[np.int64]:
    """`N[j, c]`, the count of `x` with `Tr(x + g**j / x) = c`, for every discrete log `j`.

    Row `j` is the cyclic convolution over `Z/(q-1)` of the trace level sets, summed along `c1 + c2 = c`.
    """
    p, order = field.p, field.q - 1
    traces = field.table("trace_by_log")
    indicators = np.zeros((order, p))
    indicators[np.arange(order), traces] = 1.0
    spectra = np.fft.fft(indicators, axis=0)
    table = np.empty((order, p), dtype=np.int64)
    residues = np.arange(p)
    for c in range(p):
        convolved = np.fft.ifft((spectra * spectra[:, (c - residues) % p]).sum(axis=1))
        table[:, c] = np.rint(convolved.real).astype(np.int64)
    if (table.sum(axis=1) != order).any():
        raise ArithmeticError(f"Kloosterman count table of {field} lost precision.")
    return table


def symmetric_power(kl: CycloInt, n: int, q: int) -> CycloInt:
    """`s_n` of the Frobenius pair of one Kloosterman sum."""
    s_1 = -kl
    previous, current = CycloInt.from_int(kl.p, 1), s_1
    if n == 0:
        return previous
    for _ in range(2, n + 1):
        previous, current = current, s_1 * current - q * previous
    return current


def _sym_moment_cyclotomic(field: FieldDesc, n: int) -> int:
    table = kl2_count_table(field)
    rows, multiplicities = np.unique(table, axis=0, return_counts=True)
    logger.debug("%s: %d distinct Kloosterman sums over %d elements", field, len(rows), field.q - 1)
    total = CycloInt.from_int(field.p, 0)
    for row, multiplicity in zip(rows, multiplicities):
        kl = CycloInt.from_powers(field.p, row.tolist())
        total = total + int(multiplicity) * symmetric_power(kl, n, field.q)
    return total.to_int()


def residue_primes(p: int) -> Iterator[int]:
    """Primes `l = 1 + t p` below `2**MODULAR_PRIME_BITS`, largest first.

    `F_l` then holds a primitive `p`-th root of unity, the image of `zeta_p` under a ring map `Z[zeta_p] -> F_l`.
    """
    t = ((1 << MODULAR_PRIME_BITS) - 2) // p
    while t > 0:
        candidate = 1 + t * p
        if sympy.isprime(candidate):
            yield candidate
        t -= 1


def _root_of_unity(p: int, ell: int) -> int:
    h = 2
    while pow(h, (ell - 1) // p, ell) == 1:
        h += 1
    return pow(h, (ell - 1) // p, ell)


def cyclic_square_mod(values: npt.NDArray[np.int64], ell: int) -> npt.NDArray[np.int64]:
    """`sum_i v[i] v[(j - i) % N] mod ell` for every `j`, exactly.

    The residues are split into limbs of `LIMB_BITS` bits; each limb product is convolved in double precision and
    rounded, the rounding being checked before the limbs are put back together modulo `ell`.
    """
    n_limbs = -(-ell.bit_length() // LIMB_BITS)
    mask = (1 << LIMB_BITS) - 1
    spectra = [np.fft.fft((values >> (LIMB_BITS * i)) & mask) for i in range(n_limbs)]
    result = np.zeros(len(values), dtype=np.int64)
    for i in range(n_limbs):
        for j in range(i, n_limbs):
            convolved = np.fft.ifft(spectra[i] * spectra[j]).real
            rounded = np.rint(convolved)
            if len(rounded) and np.abs(convolved - rounded).max() >= 0.25:
                raise ArithmeticError(f"Limb convolution of length {len(values)} lost precision.")
            weight = pow(2, LIMB_BITS * (i + j), ell) * (1 if i == j else 2) % ell
            result = (result + (rounded.astype(np.int64) % ell) * weight) % ell
    return result


def kl2_residues(field: FieldDesc, ell: int) -> npt.NDArray[np.int64]:
    """Images in `F_ell` of all Kloosterman sums of `field`, indexed by discrete log."""
    omega = _root_of_unity(field.p, ell)
    powers = np.array([pow(omega, c, ell) for c in range(field.p)], dtype=np.int64)
    return cyclic_square_mod(powers[field.table("trace_by_log")], ell)


def sym_moment_bound(q: int, n: int) -> int:
    """An integer bound on `|S_n(q)|`, from `|alpha| = |beta| = sqrt(q)`."""
    return (q - 1) * (n + 1) * (math.isqrt(q**n) + 1)


def _sym_moment_modular(field: FieldDesc, n: int) -> int:
    q, bound = field.q, sym_moment_bound(field.q, n)
    moduli: list[int] = []
    residues: list[int] = []
    primes = residue_primes(field.p)
    while math.prod(moduli) <= 4 * bound:
        ell = next(primes, None)
        if ell is None:
            raise ArithmeticError(f"Ran out of residue primes for S_{n}({q}).")
        s_1 = -kl2_residues(field, ell) % ell
        previous, current = np.ones_like(s_1), s_1
        if n == 0:
            current = previous
        for _ in range(2, n + 1):
            previous, current = current, (s_1 * current - (q % ell) * previous) % ell
        moduli.append(ell)
        residues.append(int(current.sum()) % ell)
    value, modulus = (int(x) for x in crt(moduli, residues))
    if value > modulus // 2:
        value -= modulus
    logger.debug("S_%d(%d) = %d from %d residue primes", n, q, value, len(moduli))
    return value


def kl2_numeric(field: FieldDesc) -> npt.NDArray[np.float64]:
    """All Kloosterman sums of `field` indexed by discrete log, as the cyclic autoconvolution of the additive
    character along the multiplicative group."""
    character = np.exp(2j * np.pi * field.table("trace_by_log") / field.p)
    return np.fft.ifft(np.fft.fft(character) ** 2).real


def sym_moment_numeric(field: FieldDesc, n: int) -> tuple[float, float]:
    """`S_n(q)` in double precision, with a bound on its rounding error."""
    if n < 0:
        raise DomainError(f"The symmetric power must be non-negative, got {n}.")
    q = field.q
    s_1 = -kl2_numeric(field)
    previous, current = np.ones_like(s_1), s_1
    if n == 0:
        current = previous
    for _ in range(2, n + 1):
        previous, current = current, s_1 * current - q * previous
    value = math.fsum(current.tolist())
    # |s_n| <= (n + 1) q**(n/2); the FFT perturbs each sum by a few ulps of q
    scale = (n + 1) * q ** (n / 2)
    error = (q - 1) * scale * 64 * np.finfo(float).eps * max(n, 1) * math.log2(q + 1)
    return value, error


def sym_moment_fast(field: FieldDesc, n: int) -> int:
    """`S_n(q)` from the floating path, rounded to the nearest integer.

    Only small fields pass: the rounding error bound outgrows `1/4` around `q**(n/2 + 1) ~ 10**12`.
    """
    value, error = sym_moment_numeric(field, n)
    nearest = round(value)
    if error >= 0.25 or abs(value - nearest) >= 0.25:
        raise NonIntegerCollapseError(
            f"S_{n}({field.q}) = {value!r} cannot be collapsed to an integer (rounding error bound {error:.3g})."
        )
    return int(nearest)


def sym_moment(
    field: FieldDesc,
    n: int,
    method: Optional[KloostermanMethodT] = None,
    exact_max_prime: int = EXACT_MAX_PRIME,
) -> int:
    """`S_n(q) = sum_a s_n(a)` over the nonzero elements of `field`.

    By default cyclotomic arithmetic is used up to characteristic `exact_max_prime`, residue arithmetic above.
    Both are exact; `method="fft"` forces the floating path.
    """
    if n < 0:
        raise DomainError(f"The symmetric power must be non-negative, got {n}.")
    if method is None:
        method = "cyclotomic" if field.p <= exact_max_prime else "modular"
    if method == "cyclotomic":
        return _sym_moment_cyclotomic(field, n)
    if method == "modular":
        return _sym_moment_modular(field, n)
    return sym_moment_fast(field, n)


def weil_bound_violations(field: FieldDesc) -> list[int]:
    """Elements `a` with `|Kl_2(a)| > 2 sqrt(q)`."""
    values = kl2_numeric(field)
    bound = 2 * math.sqrt(field.q) * (1 + 1e-9)
    exp = field.table("exp")
    return sorted(int(exp[j]) for j in np.flatnonzero(np.abs(values) > bound))


def power_sum_residual(field: FieldDesc, a: int, n: int, ctx: PrecisionContext) -> MPReal:
    """Relative gap between `s_n(a)` from the recurrence and `sum_j alpha**j beta**(n-j)` from the roots of
    `X**2 + Kl_2(a) X + q`."""
    mp = ctx.mp
    kl = kl2_counts(field, a)
    recurrence = symmetric_power(kl, n, field.q).evaluate(ctx)
    kl_value = kl.evaluate(ctx)
    root = mp.sqrt(mp.mpc(kl_value) ** 2 - 4 * field.q)
    alpha, beta = (-kl_value + root) / 2, (-kl_value - root) / 2
    direct = mp.fsum(alpha**j * beta ** (n - j) for j in range(n + 1))
    return abs(direct - recurrence) / max(1, abs(direct))
