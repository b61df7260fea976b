"""
tau-rigidity, TF-orderings and Bongartz / co-Bongartz complements.
"""

from __future__ import annotations

import functools
import itertools
import logging
from typing import FrozenSet, Iterable, Sequence, Tuple

from ..algebra.models import Ind, NakayamaAlgebra
from ..errors import UsageError
from ..homcalc.uniserial import (
    ext1_nonzero,
    gen_member,
    hom_nonzero,
    quotient_top,
    radk,
    tau,
)

logger = logging.getLogger(__name__)


def compatible(alg: NakayamaAlgebra, x: Ind, y: Ind) -> bool:
    """Whether ``x (+) y`` is tau-rigid."""
    tx, ty = tau(alg, x), tau(alg, y)
    if ty is not None and hom_nonzero(alg, x, ty):
        return False
    if tx is not None and hom_nonzero(alg, y, tx):
        return False
    return True


def is_tau_rigid(alg: NakayamaAlgebra, m: Sequence[Ind]) -> bool:
    """Hom(M_i, tau M_j) = 0 for every pair of summands, i = j included."""
    alg.check(*m)
    for mj in m:
        t = tau(alg, mj)
        if t is None:
            continue
        if any(hom_nonzero(alg, mi, t) for mi in m):
            return False
    return True


def is_tf_ordered(alg: NakayamaAlgebra, m: Sequence[Ind]) -> bool:
    """M_i is not in Gen(M_{i+1} (+) ... (+) M_t) for every i."""
    if not is_tau_rigid(alg, m):
        raise UsageError(
            "TF-order is only defined for tau-rigid modules: "
            + "+".join(str(s) for s in m)
        )
    if len(set(m)) != len(m):
        raise UsageError("summands must be pairwise distinct")
    return not any(gen_member(alg, mi, m[i + 1 :]) for i, mi in enumerate(m))


def left_perp_tau(alg: NakayamaAlgebra, m: Iterable[Ind]) -> Tuple[Ind, ...]:
    """Indecomposables of the torsion class of modules Y with Hom(Y, tau M) = 0."""
    taus = [t for t in (tau(alg, x) for x in m) if t is not None]
    return tuple(
        y for y in alg.indecomposables() if not any(hom_nonzero(alg, y, t) for t in taus)
    )


def ext_projectives(alg: NakayamaAlgebra, category: Iterable[Ind]) -> Tuple[Ind, ...]:
    """Members Y of ``category`` with Ext^1(Y, Z) = 0 for all members Z."""
    members = tuple(category)
    return tuple(
        sorted(y for y in members if not any(ext1_nonzero(alg, y, z) for z in members))
    )


def bongartz(alg: NakayamaAlgebra, x: Ind) -> Tuple[Ind, ...]:
    """The Bongartz complement B(x), summands in canonical order."""
    return _bongartz(alg, x)


@functools.cache
def _bongartz(alg: NakayamaAlgebra, x: Ind) -> Tuple[Ind, ...]:
    comp = alg.component(x)
    if alg.is_projective(x):
        return tuple(p for p in alg.projectives() if p != x)
    if comp.is_cyclic:
        n, t, l = comp.rank, x.top, x.length
        inside = [radk(alg, x, i) for i in range(1, l)]
        inside += [alg.projective(x.comp, t + i) for i in range(n - l)]
        others = [p for p in alg.projectives() if p.comp != x.comp]
        return tuple(sorted(inside + others))
    return tuple(y for y in ext_projectives(alg, left_perp_tau(alg, (x,))) if y != x)


def bongartz_by_definition(alg: NakayamaAlgebra, x: Ind) -> Tuple[Ind, ...]:
    """B(x) straight from the definition, by enumerating tau-rigid completions.

    A compatible Y belongs to B(x) unless some tau-rigid ``x (+) N`` without Y as
    a summand generates Y.
    """
    candidates = [
        y for y in alg.indecomposables() if y != x and compatible(alg, x, y)
    ]
    rigid: list[FrozenSet[Ind]] = []
    for size in range(0, alg.rank):
        for subset in itertools.combinations(candidates, size):
            if is_tau_rigid(alg, (x,) + subset):
                rigid.append(frozenset(subset))
    logger.debug("%d tau-rigid completions of %s", len(rigid), x)
    out = []
    for y in candidates:
        generated = any(
            y not in n and gen_member(alg, y, (x, *n)) for n in rigid
        )
        if not generated:
            out.append(y)
    return tuple(sorted(out))


def cobongartz(alg: NakayamaAlgebra, x: Ind) -> Tuple[Ind, ...]:
    """The co-Bongartz complement C(x): proper top quotients compatible with x."""
    alg.check(x)
    quotients = (quotient_top(alg, x, j) for j in range(1, x.length))
    return tuple(q for q in quotients if compatible(alg, x, q))


def cobongartz_by_definition(alg: NakayamaAlgebra, x: Ind) -> Tuple[Ind, ...]:
    """Ext-projectives of Gen(x) other than x."""
    gen = [y for y in alg.iter_component(x.comp) if gen_member(alg, y, (x,))]
    return tuple(y for y in ext_projectives(alg, gen) if y != x)
