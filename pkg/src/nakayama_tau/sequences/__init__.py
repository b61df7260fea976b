"""
tau-exceptional sequences and the Psi bijection.
"""

from .enumeration import (
    TauExcSeq,
    check_engine_options,
    completions,
    count_complete,
    enumerate_complete,
    enumerate_sequences,
    is_complete,
    is_tau_exceptional,
)
from .psi import f_inverse_table, psi, psi_inv, psi_inv_whole, psi_whole

__all__ = [
    "TauExcSeq",
    "check_engine_options",
    "completions",
    "count_complete",
    "enumerate_complete",
    "enumerate_sequences",
    "is_complete",
    "is_tau_exceptional",
    "f_inverse_table",
    "psi",
    "psi_inv",
    "psi_inv_whole",
    "psi_whole",
]
