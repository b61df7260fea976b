"""
Hom/Ext/tau/radical/trace arithmetic for uniserial modules.
"""

from .uniserial import (
    composition_factors,
    ell_gt,
    ext1_nonzero,
    f_of,
    gen_member,
    hom_nonzero,
    hom_overlap,
    projective_cover,
    quotient_top,
    radk,
    stable_ext1_nonzero,
    submodule,
    tau,
    trace_len,
)

__all__ = [
    "composition_factors",
    "ell_gt",
    "ext1_nonzero",
    "f_of",
    "gen_member",
    "hom_nonzero",
    "hom_overlap",
    "projective_cover",
    "quotient_top",
    "radk",
    "stable_ext1_nonzero",
    "submodule",
    "tau",
    "trace_len",
]
