"""
tau-perpendicular contexts J(M) and relative computations inside them.
"""

from .context import (
    AbstractComponent,
    WideContext,
    build_context,
    context_from_members,
    describe,
    perpendicular_members,
    rel_bongartz,
    rel_cobongartz,
    rel_ext_nonzero,
    rel_is_projective,
    rel_is_tau_rigid,
    rel_length,
    rel_proj_cover,
    rel_projectives,
    rel_radk,
    rel_tau,
    sequence_context,
    whole_category,
)

__all__ = [
    "AbstractComponent",
    "WideContext",
    "build_context",
    "context_from_members",
    "describe",
    "perpendicular_members",
    "rel_bongartz",
    "rel_cobongartz",
    "rel_ext_nonzero",
    "rel_is_projective",
    "rel_is_tau_rigid",
    "rel_length",
    "rel_proj_cover",
    "rel_projectives",
    "rel_radk",
    "rel_tau",
    "sequence_context",
    "whole_category",
]
