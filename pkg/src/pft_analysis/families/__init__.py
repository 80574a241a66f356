"""Families Package

Binary shift families built from forbidden-word generators:
- The sliding-block map ψ and its iterates
- X_k with F_k = ψ^{-(k-1)}({0}) and its point and block witnesses
- Period-2 shifts forbidding windows of period-k! sequences
"""

from .psi import psi_word, psi_periodic, psi_power, psi_power_iterated, psi_preimages
from .xk import (
    xk_forbidden, xk_forbidden_recursive, xk_spec, odd_parity_filter,
    sequential_period_exponent, predicted_t_seq, xk_period_witness, xk_reducibility_witness,
)
from .theorem8 import periodic_windows, theorem8_spec

__all__ = [
    # ψ
    "psi_word",
    "psi_periodic",
    "psi_power",
    "psi_power_iterated",
    "psi_preimages",

    # X_k
    "xk_forbidden",
    "xk_forbidden_recursive",
    "xk_spec",
    "odd_parity_filter",
    "sequential_period_exponent",
    "predicted_t_seq",
    "xk_period_witness",
    "xk_reducibility_witness",

    # Factorial family
    "periodic_windows",
    "theorem8_spec",
]
