"""Kloosterman sums over finite fields, their symmetric power moments and the Hasse-Weil local factors they build."""

from .cyclotomic import CycloInt
from .fields import FieldDesc, irreducible_moduli, is_irreducible, prime_power_fields
from .kloosterman import (
    EXACT_MAX_PRIME,
    cyclic_square_mod,
    kl2_count_table,
    kl2_counts,
    kl2_numeric,
    kl2_residues,
    power_sum_residual,
    residue_primes,
    sym_moment,
    sym_moment_bound,
    sym_moment_fast,
    sym_moment_numeric,
    symmetric_power,
    weil_bound_violations,
)
from .local import (
    MATCHED_NEWFORMS,
    CoeffMatch,
    LocalData,
    coeff_match,
    local_data,
    local_data_csv,
    local_factor,
    zeta71_estimate,
    zeta71_target,
)

__all__ = (
    "EXACT_MAX_PRIME",
    "MATCHED_NEWFORMS",
    "CoeffMatch",
    "CycloInt",
    "FieldDesc",
    "LocalData",
    "coeff_match",
    "cyclic_square_mod",
    "irreducible_moduli",
    "is_irreducible",
    "kl2_count_table",
    "kl2_counts",
    "kl2_numeric",
    "kl2_residues",
    "local_data",
    "local_data_csv",
    "local_factor",
    "power_sum_residual",
    "residue_primes",
    "prime_power_fields",
    "sym_moment",
    "sym_moment_bound",
    "sym_moment_fast",
    "sym_moment_numeric",
    "symmetric_power",
    "weil_bound_violations",
    "zeta71_estimate",
    "zeta71_target",
)
