"""Vanhove operators, parametric Bessel moment families and their Wronskians."""

from .annihilation import U_GRID, annihilation_residual, apply_to_integral, constancy_spread, constancy_values
from .families import (
    KernelIntegral,
    KernelTerm,
    MomentFamily,
    annihilated_integrals,
    constant_image_integral,
    family_members,
    family_value,
)
from .operators import (
    VANHOVE_TABLE,
    DiffOperator,
    apply_operator,
    leading_polynomial,
    second_coefficient_matches,
    vanhove_operator,
)
from .wronskian import (
    det_m_recurrence_residual,
    det_n_recurrence_residual,
    evolution_rate,
    integral_column,
    omega_evolution_residual,
    wronskian_at_one,
    wronskian_closed,
    wronskian_from_columns,
    wronskian_numeric,
)

__all__ = (
    "U_GRID",
    "VANHOVE_TABLE",
    "DiffOperator",
    "KernelIntegral",
    "KernelTerm",
    "MomentFamily",
    "annihilated_integrals",
    "annihilation_residual",
    "apply_operator",
    "apply_to_integral",
    "constancy_spread",
    "constancy_values",
    "constant_image_integral",
    "det_m_recurrence_residual",
    "det_n_recurrence_residual",
    "evolution_rate",
    "family_members",
    "family_value",
    "integral_column",
    "leading_polynomial",
    "omega_evolution_residual",
    "second_coefficient_matches",
    "vanhove_operator",
    "wronskian_at_one",
    "wronskian_closed",
    "wronskian_from_columns",
    "wronskian_numeric",
)
