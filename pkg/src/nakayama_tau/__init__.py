"""
nakayama-tau

tau-tilting calculus for products of linear and cyclic Nakayama algebras:
Hom/Ext arithmetic, Bongartz complements, tau-perpendicular reductions,
tau-exceptional sequences and the braid relations of their mutation.
"""

__version__ = "1.0.0"

# Import main components for easier access
from .algebra import Ind, NakayamaAlgebra, parse_algebra, parse_module, parse_sequence
from .config import config
from .errors import InvariantViolation, LiteralError, NakayamaError, UsageError
from .mutation import apply_word, mutate_at, mutate_at_inverse, verify_braid
from .reduction import build_context, whole_category
from .sequences import enumerate_complete, psi, psi_inv
from .storage import RunStore

__all__ = [
    "Ind",
    "NakayamaAlgebra",
    "parse_algebra",
    "parse_module",
    "parse_sequence",
    "config",
    "InvariantViolation",
    "LiteralError",
    "NakayamaError",
    "UsageError",
    "apply_word",
    "mutate_at",
    "mutate_at_inverse",
    "verify_braid",
    "build_context",
    "whole_category",
    "enumerate_complete",
    "psi",
    "psi_inv",
    "RunStore",
]
