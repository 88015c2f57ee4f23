"""Eta quotients, the three newforms attached to Bessel moments, and their modular parametrizations."""

from .eta import EtaQuotient, eta, eta_qexp, eta_transformation_residual, q_order
from .newforms import (
    NEWFORMS,
    Newform,
    deligne_bound_check,
    get_newform,
    hecke_multiplicative,
    newform_coeffs,
    newform_coeffs_csv,
    newform_value,
    reflection_point_residual,
)
from .parametrization import (
    X63,
    Z63,
    eval_point,
    f46_argument,
    f66_series_identity,
    f66_series_mismatch,
    hankel_argument,
    parametrization_residual,
)

__all__ = (
    "NEWFORMS",
    "X63",
    "Z63",
    "EtaQuotient",
    "Newform",
    "deligne_bound_check",
    "eta",
    "eta_qexp",
    "eta_transformation_residual",
    "eval_point",
    "f46_argument",
    "f66_series_identity",
    "f66_series_mismatch",
    "get_newform",
    "hankel_argument",
    "hecke_multiplicative",
    "newform_coeffs",
    "newform_coeffs_csv",
    "newform_value",
    "parametrization_residual",
    "q_order",
    "reflection_point_residual",
)
