"""Exact equivariant Donaldson-Thomas partition functions of affine 3-space.

All numeric inputs and outputs are exact fraction strings ("num/den"); series
are returned as coefficient lists indexed by the power of q.
"""

from quotdt._quotdt import (
    chern_integral,
    count_colored_partitions,
    dtcoh,
    dtcoh_closed,
    dtell_closed,
    dtk,
    dtk_closed,
    dtmot,
    global_dt,
    verify_coh_closed,
    verify_cy_specialization,
    verify_elliptic_restriction,
    verify_framing_independence,
    verify_gluing,
    verify_kth_closed,
    verify_lambda_independence,
    verify_motivic_factorization,
    verify_product_formula,
)

__all__ = [
    "chern_integral",
    "count_colored_partitions",
    "dtcoh",
    "dtcoh_closed",
    "dtell_closed",
    "dtk",
    "dtk_closed",
    "dtmot",
    "global_dt",
    "verify_coh_closed",
    "verify_cy_specialization",
    "verify_elliptic_restriction",
    "verify_framing_independence",
    "verify_gluing",
    "verify_kth_closed",
    "verify_lambda_independence",
    "verify_motivic_factorization",
    "verify_product_formula",
]
