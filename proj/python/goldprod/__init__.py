"""Number-theoretic tables and certified golden-ratio product identities.

Everything heavy lives in the compiled extension; this package just re-exports
it under stable names.
"""

from goldprod._core import (
    dirichlet_one_convolve,
    formal_coefficients,
    general_identity,
    lemma1,
    lemma2,
    mobius_range,
    special_product,
    tau_decimal,
    tau_power,
    theorem_log_sum,
    theorem_product,
    totient_from_mobius,
    totient_range,
    verify_divisor_sums,
)

__all__ = [
    "dirichlet_one_convolve",
    "formal_coefficients",
    "general_identity",
    "lemma1",
    "lemma2",
    "mobius_range",
    "special_product",
    "tau_decimal",
    "tau_power",
    "theorem_log_sum",
    "theorem_product",
    "totient_from_mobius",
    "totient_range",
    "verify_divisor_sums",
]
