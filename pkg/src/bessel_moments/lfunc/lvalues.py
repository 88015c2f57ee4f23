"""L-values of the newforms at integer points, from the Mellin transform split at the fixed point of the Fricke
involution.

With `y0 = 1/sqrt(N)` and `f(i/(N y)) = (sqrt(N) y)**k f(i y)`,

    L(f, s) = (2 pi)**s / Gamma(s) sum_n A_n [(2 pi n)**-s Gamma(s, 2 pi n y0)
                                              + N**(k/2 - s) (2 pi n)**(s - k) Gamma(k - s, 2 pi n y0)],

which holds for every integer `s`, critical or not.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from ..exceptions import DomainError
from ..modular import get_newform, newform_coeffs
from ..mpcore import MPReal, PrecisionContext, incgamma_int
from ..typing import NewformT

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LValueRequest:
    form: NewformT
    s: int

    def __post_init__(self) -> None:
        if not isinstance(self.s, int) or isinstance(self.s, bool):
            raise DomainError(f"L-values are computed at integer points only, got s={self.s!r}.")
        if self.s < 1:
            raise DomainError(f"L-values are computed for s >= 1, got s={self.s}.")

    @property
    def critical(self) -> bool:
        return 0 < self.s < get_newform(self.form).weight

    def __str__(self) -> str:
        return f"L({self.form},{self.s})"


def default_terms(form: NewformT, ctx: PrecisionContext) -> int:
    """Number of coefficients after which `exp(-2 pi n / sqrt(N))` drops below the working precision."""
    level = get_newform(form).level
    return math.ceil((ctx.working_digits + 10) * math.log(10) * math.sqrt(level) / (2 * math.pi)) + 10


@lru_cache(maxsize=None)
def lvalue(form: NewformT, s: int, ctx: PrecisionContext, terms: Optional[int] = None) -> MPReal:
    request = LValueRequest(form, s)
    newform = get_newform(form)
    mp = ctx.mp
    k, N = newform.weight, newform.level
    terms = terms if terms is not None else default_terms(form, ctx)
    coeffs = newform_coeffs(form, terms)

    step = 2 * mp.pi / mp.sqrt(N)
    reflected = mp.mpf(N) ** (mp.mpf(k) / 2 - s)
    total = []
    for n, a_n in enumerate(coeffs, start=1):
        if a_n == 0:
            continue
        x = step * n
        two_pi_n = 2 * mp.pi * n
        term = two_pi_n ** (-s) * incgamma_int(s, x, ctx)
        term += reflected * two_pi_n ** (s - k) * incgamma_int(k - s, x, ctx)
        total.append(a_n * term)
    value = (2 * mp.pi) ** s / mp.factorial(s - 1) * mp.fsum(total)
    logger.debug("%s (critical=%s) from %d coefficients: %s", request, request.critical, terms, mp.nstr(value, 15))
    return value


def lambda_completed(form: NewformT, s: int, ctx: PrecisionContext) -> MPReal:
    """`Lambda(f, s) = (sqrt(N)/pi)**s Gamma(s/2) Gamma((s+1)/2) L(f, s)`."""
    mp = ctx.mp
    N = get_newform(form).level
    return (mp.sqrt(N) / mp.pi) ** s * mp.gamma(mp.mpf(s) / 2) * mp.gamma(mp.mpf(s + 1) / 2) * lvalue(form, s, ctx)


def reflection_residual(form: NewformT, s: int, ctx: PrecisionContext) -> MPReal:
    """`Lambda(f, s) - Lambda(f, k - s)`, which vanishes for the three forms."""
    k = get_newform(form).weight
    if k - s < 1:
        raise DomainError(f"The reflection of s={s} lies outside s >= 1 for weight {k}.")
    return lambda_completed(form, s, ctx) - lambda_completed(form, k - s, ctx)
