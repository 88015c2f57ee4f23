"""Precision contexts, exact series and the special functions the other packages consume."""

from .context import Estimate, MPComplex, MPReal, Number, PrecisionContext, digits_of_agreement
from .hankel import hankel_asymptotic_coefficients, hankel_product_series, ik_product_series
from .series import RationalSeries
from .special import bessel, exponential_integral, gamma_real, incgamma_int

__all__ = (
    "Estimate",
    "MPComplex",
    "MPReal",
    "Number",
    "PrecisionContext",
    "RationalSeries",
    "bessel",
    "digits_of_agreement",
    "exponential_integral",
    "gamma_real",
    "hankel_asymptotic_coefficients",
    "hankel_product_series",
    "ik_product_series",
    "incgamma_int",
)
