"""
Mutation of TF-ordered pairs and tau-exceptional sequences, braid checks, orbits.
"""

from .actions import (
    Letter,
    MutationWord,
    Orbit,
    apply_word,
    mutate_at,
    mutate_at_inverse,
    orbits,
)
from .pairs import (
    Case,
    CaseTag,
    classify_case,
    mutate_pair,
    mutate_pair_inverse,
    mutate_sequence_pair,
    mutate_sequence_pair_inverse,
    tf_pairs,
)
from .verify import (
    BraidReport,
    Counterexample,
    braid_relations,
    verify_b1,
    verify_b2,
    verify_braid,
)

__all__ = [
    "Letter",
    "MutationWord",
    "Orbit",
    "apply_word",
    "mutate_at",
    "mutate_at_inverse",
    "orbits",
    "Case",
    "CaseTag",
    "classify_case",
    "mutate_pair",
    "mutate_pair_inverse",
    "mutate_sequence_pair",
    "mutate_sequence_pair_inverse",
    "tf_pairs",
    "BraidReport",
    "Counterexample",
    "braid_relations",
    "verify_b1",
    "verify_b2",
    "verify_braid",
]
