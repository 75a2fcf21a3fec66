"""Exact computations with Taft, Nichols and cyclic group Hopf algebras and
their partial actions and coactions on the base field."""

from ._core import (
    Algebra,
    Error,
    algebra,
    check_identity,
    classify,
    duality_check,
    family_count,
    from_json,
    known_actions,
    known_coactions,
    q_binomial,
    reference_mismatches,
    to_json,
    validate,
)

__all__ = [
    "Algebra",
    "Error",
    "algebra",
    "check_identity",
    "classify",
    "duality_check",
    "family_count",
    "from_json",
    "known_actions",
    "known_coactions",
    "q_binomial",
    "reference_mismatches",
    "to_json",
    "validate",
]
