"""Bessel moments, their sum rules and the exact numbers they encode."""

from .closed import (
    ClosedConstantId,
    bologna_constant,
    broadhurst_mellit_matrix,
    closed_constant,
    crandall_relation_residual,
    det_m_closed,
    det_n_closed,
    det_numeric,
    n3_closed,
    n3_reduced_determinant,
)
from .combinations import (
    CombinationTerm,
    jym_cancelation_residual,
    laporta_residual,
    sum_rule_residual,
    sum_rule_terms,
    valid_sum_rules,
)
from .crandall import (
    crandall_a,
    crandall_a_exact,
    crandall_convolution_check,
    crandall_exact,
    crandall_numeric,
    rogers_check,
    rogers_mismatch,
)
from .ikm import MomentRequest, ikm, jym

__all__ = (
    "ClosedConstantId",
    "CombinationTerm",
    "MomentRequest",
    "bologna_constant",
    "broadhurst_mellit_matrix",
    "closed_constant",
    "crandall_a",
    "crandall_a_exact",
    "crandall_convolution_check",
    "crandall_exact",
    "crandall_numeric",
    "crandall_relation_residual",
    "det_m_closed",
    "det_n_closed",
    "det_numeric",
    "ikm",
    "jym",
    "jym_cancelation_residual",
    "laporta_residual",
    "n3_closed",
    "n3_reduced_determinant",
    "rogers_check",
    "rogers_mismatch",
    "sum_rule_residual",
    "sum_rule_terms",
    "valid_sum_rules",
)
