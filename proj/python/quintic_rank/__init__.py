"""Predicted rank of the ambiguous 5-class group of Q(n^(1/5), zeta5)."""

from ._core import (
    DegenerateRadicand,
    IndeterminateRank,
    classify,
    emit_table,
    enumerate,
    factorize,
    is_prime,
    match_form,
    mult_order_mod5,
    normalize,
    normalize_factors,
    splitting,
    splitting_oracle,
    verify_fixtures,
)

__all__ = [
    "DegenerateRadicand",
    "IndeterminateRank",
    "classify",
    "emit_table",
    "enumerate",
    "factorize",
    "is_prime",
    "match_form",
    "mult_order_mod5",
    "normalize",
    "normalize_factors",
    "splitting",
    "splitting_oracle",
    "verify_fixtures",
]
