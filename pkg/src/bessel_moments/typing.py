from __future__ import annotations

from typing import Literal, TypedDict

from ._compat import TypeAlias

BesselKindT: TypeAlias = Literal["I0", "I1", "K0", "K1", "J0", "Y0"]
MomentKindT: TypeAlias = Literal["IKM", "JYM"]
SumRuleVariantT: TypeAlias = Literal["plus", "minus"]
DecayKindT: TypeAlias = Literal["exponential", "algebraic", "oscillatory", "finite"]
SingularityT: TypeAlias = Literal["log_at_zero", "none"]
DifferentiationModeT: TypeAlias = Literal["finite_difference", "analytic"]
AcceleratorT: TypeAlias = Literal["levin", "averaging"]
FamilyKindT: TypeAlias = Literal["mu", "nu"]
NewformT: TypeAlias = Literal["F3_15", "F4_6", "F6_6"]
ParametrizationT: TypeAlias = Literal["IKKK", "IIKK", "F46_J", "F46_JY"]
IdentityKindT: TypeAlias = Literal["theorem", "conjecture", "cross_check"]
ToleranceClassT: TypeAlias = Literal["full", "oscillatory", "fd_degraded", "experimental"]
StatusT: TypeAlias = Literal["pass", "fail", "experimental"]
SuiteT: TypeAlias = Literal["theorems", "conjectures", "kloosterman", "all"]
ReportFormatT: TypeAlias = Literal["json", "csv", "text"]
KloostermanMethodT: TypeAlias = Literal["cyclotomic", "modular", "fft"]


class BesselMomentsSettingsDict(TypedDict, total=False):
    """A utility `TypedDict` to be used in user code settings.

    ```python
    BESSEL_MOMENTS: BesselMomentsSettingsDict = {
        "GUARD_DIGITS": 20,
        "VERIFY": {"DIGITS": 60},
        ...
    }
    ```
    """

    GUARD_DIGITS: int
    """Extra working digits carried on top of the requested precision."""

    MAX_GUARD_DIGITS: int
    """Upper bound on guard digits spent on cancelation in the J0/Y0 power series."""

    QUADRATURE: QuadratureSettingsDict
    """Integration engine settings."""

    VERIFY: VerifySettingsDict
    """Verification catalog settings."""


class QuadratureSettingsDict(TypedDict, total=False):
    """Configuration of the integration and differentiation engines."""

    MAX_DEGREE: int
    """Maximal tanh-sinh level before a non-convergence error is raised."""

    PANELS_START: int
    """Number of inter-zero panels summed before the first acceleration attempt."""

    PANELS_CAP: int
    """Maximal number of inter-zero panels."""

    ACCELERATOR: AcceleratorT
    """Sequence transformation used on oscillatory tails."""

    ANALYTIC_MAX_ORDER: int
    """Highest derivative order taken analytically under the integral sign."""

    DEBUG_DECAY_SAMPLING: bool
    """Spot-check declared decay rates of integrands."""


class VerifySettingsDict(TypedDict, total=False):
    """Configuration of the verification runner."""

    DIGITS: int
    """Default number of requested decimal digits."""

    JYM_DIGITS: int
    """Precision cap for oscillatory moments."""

    JOBS: int
    """Number of worker processes."""

    FORMAT: ReportFormatT
    """Default report format."""

    INCLUDE_WRONSKIAN_K3: bool
    """Include the 5x5 Wronskian checks."""

    ZETA71_PRIME_BOUND: int
    """Prime bound used by the experimental zeta estimate."""

    KLOOSTERMAN_EXACT_MAX_PRIME: int
    """Largest characteristic handled with exact cyclotomic arithmetic."""

    KLOOSTERMAN_MAX_FIELD: int
    """Largest field size handled at all."""

    CACHE_ALIAS: str
    """Django cache alias holding computed values."""
