"""
tau-rigid modules, TF-orders and Bongartz complements.
"""

from .rigidity import (
    bongartz,
    bongartz_by_definition,
    cobongartz,
    cobongartz_by_definition,
    compatible,
    ext_projectives,
    is_tau_rigid,
    is_tf_ordered,
    left_perp_tau,
)

__all__ = [
    "bongartz",
    "bongartz_by_definition",
    "cobongartz",
    "cobongartz_by_definition",
    "compatible",
    "ext_projectives",
    "is_tau_rigid",
    "is_tf_ordered",
    "left_perp_tau",
]
