"""
The bijection between TF-ordered tau-rigid modules and tau-exceptional sequences.

    Psi(M_1 (+) ... (+) M_t) = (Psi_{J(M_t)}(f_{M_t} M_1, ..., f_{M_t} M_{t-1}), M_t)

Both directions are computed in the whole module category of an algebra; a
context is handled by translating into its abstract algebra first.
"""

from __future__ import annotations

import functools
import logging
from typing import Dict, Sequence, Tuple

from ..algebra.models import Ind, NakayamaAlgebra
from ..errors import InvariantViolation, UsageError
from ..homcalc.uniserial import f_of, gen_member
from ..reduction.context import WideContext, build_context
from ..taurigid.rigidity import compatible, is_tf_ordered

logger = logging.getLogger(__name__)


def psi(ctx: WideContext, module: Sequence[Ind]) -> Tuple[Ind, ...]:
    """The tau-exceptional sequence of a TF-ordered module of ``ctx``."""
    inner = tuple(ctx.abstract_of(m) for m in module)
    return tuple(ctx.to_ambient[a] for a in psi_whole(ctx.abstract, inner))


def psi_inv(ctx: WideContext, seq: Sequence[Ind]) -> Tuple[Ind, ...]:
    """The TF-ordered module whose sequence is ``seq``."""
    inner = tuple(ctx.abstract_of(a) for a in seq)
    return tuple(ctx.to_ambient[m] for m in psi_inv_whole(ctx.abstract, inner))


@functools.cache
def psi_whole(alg: NakayamaAlgebra, module: Tuple[Ind, ...]) -> Tuple[Ind, ...]:
    if not module:
        return ()
    if not is_tf_ordered(alg, module):
        raise UsageError(
            "not TF-ordered: " + ",".join(alg.label(m) for m in module)
        )
    last = module[-1]
    inner = build_context(alg, (last,))
    images = []
    for m in module[:-1]:
        image = f_of(alg, (last,), m)
        if image is None or image not in inner.members:
            raise InvariantViolation(
                f"f_{last}({m}) = {image} does not lie in J({last})", (m, last)
            )
        images.append(image)
    return psi(inner, images) + (last,)


@functools.cache
def f_inverse_table(alg: NakayamaAlgebra, last: Ind) -> Dict[Ind, Ind]:
    """f_last restricted to U with U (+) last tau-rigid and TF-ordered, inverted."""
    table: Dict[Ind, Ind] = {}
    for u in alg.indecomposables():
        if u == last or not compatible(alg, u, last) or gen_member(alg, u, (last,)):
            continue
        image = f_of(alg, (last,), u)
        if image is None:
            continue
        if image in table:
            raise InvariantViolation(
                f"f_{last} is not injective: {table[image]} and {u} both map to {image}",
                (table[image], u, image),
            )
        table[image] = u
    logger.debug("f-inverse table for %s over %s has %d entries", last, alg, len(table))
    return table


@functools.cache
def psi_inv_whole(alg: NakayamaAlgebra, seq: Tuple[Ind, ...]) -> Tuple[Ind, ...]:
    if not seq:
        return ()
    alg.check(*seq)
    last = seq[-1]
    if len(seq) == 1:
        return (last,)
    inner = build_context(alg, (last,))
    outside = [a for a in seq[:-1] if a not in inner.members]
    if outside:
        raise UsageError(
            f"not tau-exceptional: {alg.label(outside[0])} is not in J({alg.label(last)})"
        )
    reduced = psi_inv(inner, seq[:-1])
    table = f_inverse_table(alg, last)
    lifted = []
    for u in reduced:
        if u not in table:
            raise InvariantViolation(f"no f_{last}-preimage of {u}", (u, last))
        lifted.append(table[u])
    return tuple(lifted) + (last,)
