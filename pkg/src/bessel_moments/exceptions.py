from __future__ import annotations

from pathlib import Path

__all__ = (
    "AccelerationStallError",
    "BesselMomentsError",
    "CacheError",
    "ComplexResidualError",
    "ConvergenceError",
    "DivergenceError",
    "DomainError",
    "InsufficientDecayError",
    "MisdeclaredDecayError",
    "NonConvergenceError",
    "NonIntegerCollapseError",
    "ParameterDomainError",
    "PoleError",
    "PrecisionError",
    "PrecisionOverflowError",
    "StepUnderflowError",
    "TailTruncationError",
    "UnknownSuiteError",
    "UnsupportedOrderError",
)


class BesselMomentsError(Exception):
    """Base class of every error raised by this package."""


class DomainError(BesselMomentsError, ValueError):
    """An argument lies outside the domain of the requested operation."""


class PoleError(DomainError):
    pass


class DivergenceError(DomainError):
    """The requested moment does not converge."""


class ParameterDomainError(DomainError):
    """Integer parameters violate the conditions of a sum rule."""


class UnsupportedOrderError(DomainError):
    pass


class InsufficientDecayError(DomainError):
    """A q-series would need more terms than allowed at this point of the upper half-plane."""


class PrecisionError(BesselMomentsError):
    pass


class PrecisionOverflowError(PrecisionError):
    """The guard digits needed to absorb cancelation exceed the configured cap."""


class StepUnderflowError(PrecisionError):
    """The finite difference step is below the resolution of the working precision."""


class ConvergenceError(BesselMomentsError, RuntimeError):
    pass


class NonConvergenceError(ConvergenceError):
    pass


class TailTruncationError(ConvergenceError):
    """The optimally truncated asymptotic tail cannot reach the requested tolerance."""


class AccelerationStallError(ConvergenceError):
    """Successive accelerated estimates of an oscillatory tail stopped contracting."""


class MisdeclaredDecayError(ConvergenceError):
    """Sampling contradicted the decay declared by an integrand."""


class ComplexResidualError(BesselMomentsError):
    """A quantity expected to be real carries a significant imaginary part."""


class NonIntegerCollapseError(BesselMomentsError):
    """A cyclotomic sum expected to be a rational integer is not."""


class UnknownSuiteError(BesselMomentsError, ValueError):
    pass


class CacheError(BesselMomentsError):
    def __init__(self, message: str, path: Path | str | None = None) -> None:
        super().__init__(f"{message} ({path})" if path is not None else message)
        self.path = path
