from __future__ import annotations

from copy import deepcopy
from dataclasses import dataclass, field

from django.conf import LazySettings

from ._compat import Self
from .typing import AcceleratorT, BesselMomentsSettingsDict, ReportFormatT


@dataclass(frozen=True)
class QuadratureSettings:
    """Configuration of the integration and differentiation engines."""

    MAX_DEGREE: int = 10
    """Maximal tanh-sinh level before a non-convergence error is raised."""

    PANELS_START: int = 32
    """Number of inter-zero panels summed before the first acceleration attempt."""

    PANELS_CAP: int = 4096
    """Maximal number of inter-zero panels. Acceleration stalls past this count."""

    ACCELERATOR: AcceleratorT = "levin"
    """Sequence transformation used on oscillatory tails.

    `levin` applies the Levin u-transform and works on both alternating and monotone panel sums.
    `averaging` repeatedly averages consecutive partial sums and is only suited to alternating tails.
    """

    ANALYTIC_MAX_ORDER: int = 2
    """Highest derivative order taken analytically under the integral sign.

    Higher orders fall back to central finite differences with Richardson extrapolation.
    """

    DEBUG_DECAY_SAMPLING: bool = False
    """Spot-check the decay declared by every integrand before integrating it."""


@dataclass
class VerifySettings:
    """Configuration of the verification runner."""

    DIGITS: int = 50
    """Default number of requested decimal digits."""

    JYM_DIGITS: int = 30
    """Precision cap for oscillatory moments. Checks involving them use the oscillatory tolerance."""

    JOBS: int = 1
    """Number of worker processes used to run independent checks."""

    FORMAT: ReportFormatT = "text"
    """Default report format."""

    INCLUDE_WRONSKIAN_K3: bool = False
    """Include the 5x5 Wronskian checks, which are expensive."""

    ZETA71_PRIME_BOUND: int = 2000
    """Prime bound used by the experimental zeta estimate."""

    KLOOSTERMAN_EXACT_MAX_PRIME: int = 200
    """Largest characteristic for which Kloosterman moments use cyclotomic arithmetic.

    Products of cyclotomic integers cost `O(p**2)`; larger characteristics use residue arithmetic modulo primes
    `l = 1 (mod p)`, which is exact as well.
    """

    KLOOSTERMAN_MAX_FIELD: int = 10**6
    """Largest field size handled by the `kloosterman` command."""

    CACHE_ALIAS: str = "bessel_moments"
    """Django cache alias holding computed values."""


@dataclass
class BesselMomentsSettings:
    """A class holding the bessel-moments configuration."""

    GUARD_DIGITS: int = 15
    """Extra working digits carried on top of the requested precision."""

    MAX_GUARD_DIGITS: int = 400
    """Upper bound on guard digits spent on cancelation in the J0/Y0 power series."""

    QUADRATURE: QuadratureSettings = field(default_factory=QuadratureSettings)
    """Integration engine settings."""

    VERIFY: VerifySettings = field(default_factory=VerifySettings)
    """Verification catalog settings."""

    @classmethod
    def from_django_settings(cls, settings: LazySettings) -> Self:
        bm_settings: BesselMomentsSettingsDict = deepcopy(getattr(settings, "BESSEL_MOMENTS", {}))
        quadrature_dct = bm_settings.pop("QUADRATURE", {})
        verify_dct = bm_settings.pop("VERIFY", {})
        return cls(
            **bm_settings,
            QUADRATURE=QuadratureSettings(**quadrature_dct),
            VERIFY=VerifySettings(**verify_dct),
        )
