"""Exact-arithmetic toolkit for hook-length and Euler-product identities.

Partitions, hook multisets, t-core codings and bijections, the core/quotient
decomposition, truncated power series over exact polynomial coefficients, and
a verifier per identity, all over arbitrary-precision rationals.
"""

from .abacus import (
    HSet,
    NCoding,
    UCoding,
    VCoding,
    coding_product,
    core_hook_product,
    core_weight_from_v,
    enumerate_v_codings,
    h_set,
    max_t,
    phi_n,
    phi_v,
    phi_v_from_n,
    phi_v_inverse,
)
from .identities import (
    IdentityReport,
    Mismatch,
    euler_power_coefficient,
    euler_power_summand,
    euler_reversion_terms,
    kostant_positivity,
    lhs_hook_sum,
    run_identity,
    verify_corollaries,
    verify_extension_ty,
    verify_hook_t_count,
    verify_macdonald_odd,
    verify_nekrasov_okounkov,
    verify_scalar_hook_sums,
)
from .partitions import (
    Partition,
    count_t_cores,
    enumerate_partitions,
    hook_lengths,
    hook_lengths_mod_t,
    is_t_core,
    syt_count,
)
from .polynomial import Polynomial
from .quotient import (
    BinaryWord,
    CoreQuotient,
    compose,
    decode_word,
    decompose,
    encode_word,
)
from .series import TruncatedSeries, euler_product_power, euler_product_power_direct

__all__ = [
    "BinaryWord",
    "CoreQuotient",
    "HSet",
    "IdentityReport",
    "Mismatch",
    "NCoding",
    "Partition",
    "Polynomial",
    "TruncatedSeries",
    "UCoding",
    "VCoding",
    "coding_product",
    "compose",
    "core_hook_product",
    "core_weight_from_v",
    "count_t_cores",
    "decode_word",
    "decompose",
    "encode_word",
    "enumerate_partitions",
    "enumerate_v_codings",
    "euler_power_coefficient",
    "euler_power_summand",
    "euler_product_power",
    "euler_product_power_direct",
    "euler_reversion_terms",
    "h_set",
    "hook_lengths",
    "hook_lengths_mod_t",
    "is_t_core",
    "kostant_positivity",
    "lhs_hook_sum",
    "max_t",
    "phi_n",
    "phi_v",
    "phi_v_from_n",
    "phi_v_inverse",
    "run_identity",
    "syt_count",
    "verify_corollaries",
    "verify_extension_ty",
    "verify_hook_t_count",
    "verify_macdonald_odd",
    "verify_nekrasov_okounkov",
    "verify_scalar_hook_sums",
]
