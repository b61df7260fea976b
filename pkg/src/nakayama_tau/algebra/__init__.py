"""
Algebra descriptors, indecomposable modules and their literals.
"""

from .models import (
    Component,
    Ind,
    Kind,
    MaybeInd,
    NakayamaAlgebra,
    OrderedModule,
    indecomposables,
    is_projective,
)
from .literals import (
    format_module,
    format_sequence,
    parse_algebra,
    parse_module,
    parse_partial_sequence,
    parse_sequence,
)

__all__ = [
    "Component",
    "Ind",
    "Kind",
    "MaybeInd",
    "NakayamaAlgebra",
    "OrderedModule",
    "indecomposables",
    "is_projective",
    "format_module",
    "format_sequence",
    "parse_algebra",
    "parse_module",
    "parse_partial_sequence",
    "parse_sequence",
]
