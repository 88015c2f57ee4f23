from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Optional

from .._compat import Self
from ..exceptions import MisdeclaredDecayError
from ..mpcore import MPReal, Number, PrecisionContext
from ..typing import DecayKindT, SingularityT

logger = logging.getLogger(__name__)

Evaluator = Callable[[MPReal], MPReal]


@dataclass(frozen=True)
class IntegrandSpec:
    """An integrand on `[lower, upper)` together with an honest description of its behavior.

    `rate` is read according to `decay`:

    - `exponential`: `|f(t)| <= C exp(-rate t)` for `t >= 1` (up to a power of `t`).
    - `algebraic`: `|f(t)| <= C t**rate`, with `rate < -1` for the integral to converge.
    - `oscillatory`: the tail oscillates like `J0(rate t)`; the zeros of `J0(rate t)` split it in panels.
    - `finite`: `upper` is finite and `rate` is unused.
    """

    evaluator: Evaluator
    decay: DecayKindT
    rate: Number = 0
    singularity: SingularityT = "none"
    lower: Number = 0
    upper: Optional[Number] = None

    @classmethod
    def exponential(cls, evaluator: Evaluator, rate: Number, singularity: SingularityT = "log_at_zero") -> Self:
        return cls(evaluator, "exponential", rate, singularity)

    @classmethod
    def algebraic(cls, evaluator: Evaluator, power: Number, singularity: SingularityT = "log_at_zero") -> Self:
        return cls(evaluator, "algebraic", power, singularity)

    @classmethod
    def oscillatory(
        cls, evaluator: Evaluator, frequency: Number = 1, singularity: SingularityT = "log_at_zero"
    ) -> Self:
        return cls(evaluator, "oscillatory", frequency, singularity)

    @classmethod
    def finite(cls, evaluator: Evaluator, lower: Number, upper: Number) -> Self:
        return cls(evaluator, "finite", 0, "none", lower, upper)

    def __call__(self, t: MPReal) -> MPReal:
        return self.evaluator(t)

    def check_decay(self, ctx: PrecisionContext) -> None:
        """Sample the integrand far out and raise `MisdeclaredDecayError` if it decays slower than declared.

        An exponential integrand must decay at least at half its declared rate between `20/rate` and
        `40/rate`; an algebraic one must decay at least like `t**((rate - 1)/2)` between 10 and 100.
        """
        mp = ctx.mp
        if self.decay == "exponential":
            rate = ctx.mpf(self.rate)
            t1, t2 = 20 / rate, 40 / rate
            near = abs(self(t1)) * mp.exp(rate * t1 / 2)
            far = abs(self(t2)) * mp.exp(rate * t2 / 2)
        elif self.decay == "algebraic":
            power = (ctx.mpf(self.rate) - 1) / 2
            t1, t2 = mp.mpf(10), mp.mpf(100)
            near = abs(self(t1)) * t1 ** (-power)
            far = abs(self(t2)) * t2 ** (-power)
        else:
            return
        logger.debug("Decay sampling of a %s integrand: %s -> %s", self.decay, mp.nstr(near, 5), mp.nstr(far, 5))
        if far > near:
            raise MisdeclaredDecayError(
                f"Integrand declared {self.decay} with rate {self.rate} decays slower when sampled "
                f"at t={mp.nstr(t1, 5)} and t={mp.nstr(t2, 5)}."
            )
