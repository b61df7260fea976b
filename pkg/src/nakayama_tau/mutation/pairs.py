"""
Left mutation of TF-ordered pairs B (+) C by the six-case formula, its inverse,
and the induced mutation of tau-exceptional pairs.

    TF-1a  C projective, Hom(C, B) = 0        ->  C (+) B
    TF-1b  C projective, Hom(C, B) != 0       ->  B (+) f_C B
    TF-2a  C = B / rad^k B, B not projective  ->  rad^k B (+) B
    TF-2b  C = B / rad^k B, B projective      ->  P(rad^k B) (+) B
    TF-3   otherwise                          ->  C (+) B
    TF-4   C in add B(B), C not projective    ->  B (+) f_C B
"""

from __future__ import annotations

import enum
import functools
import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Tuple

from ..algebra.models import Ind, NakayamaAlgebra
from ..errors import InvariantViolation, UsageError
from ..homcalc.uniserial import f_of, hom_nonzero, projective_cover, radk
from ..reduction.context import WideContext
from ..sequences.psi import psi_inv_whole, psi_whole
from ..taurigid.rigidity import bongartz, cobongartz, is_tau_rigid, is_tf_ordered

logger = logging.getLogger(__name__)

Pair = Tuple[Ind, Ind]


class Case(str, enum.Enum):
    TF_1A = "TF-1a"
    TF_1B = "TF-1b"
    TF_2A = "TF-2a"
    TF_2B = "TF-2b"
    TF_3 = "TF-3"
    TF_4 = "TF-4"


@dataclass(frozen=True)
class CaseTag:
    case: Case
    left_regular: bool

    def __str__(self) -> str:
        return self.case.value if self.left_regular else f"{self.case.value} (irregular)"


def _tf_pair(alg: NakayamaAlgebra, b: Ind, c: Ind) -> None:
    if b == c or not is_tau_rigid(alg, (b, c)) or not is_tf_ordered(alg, (b, c)):
        raise UsageError(f"{alg.label(b)} (+) {alg.label(c)} is not a TF-ordered tau-rigid pair")


@functools.cache
def _classify(alg: NakayamaAlgebra, b: Ind, c: Ind) -> CaseTag:
    _tf_pair(alg, b, c)
    if alg.is_projective(c):
        case = Case.TF_1B if hom_nonzero(alg, c, b) else Case.TF_1A
    elif c in cobongartz(alg, b):
        case = Case.TF_2B if alg.is_projective(b) else Case.TF_2A
    elif c in bongartz(alg, b):
        case = Case.TF_4
    else:
        case = Case.TF_3
    return CaseTag(case, left_regular=case is not Case.TF_4)


@functools.cache
def _mutate(alg: NakayamaAlgebra, b: Ind, c: Ind) -> Pair:
    case = _classify(alg, b, c).case
    if case in (Case.TF_1A, Case.TF_3):
        return (c, b)
    if case in (Case.TF_1B, Case.TF_4):
        image = f_of(alg, (c,), b)
        if image is None:
            raise InvariantViolation(f"f_{c}({b}) vanishes", (b, c))
        return (b, image)
    rad = radk(alg, b, c.length)
    if rad is None:
        raise InvariantViolation(f"rad^{c.length} {b} vanishes", (b, c))
    if case is Case.TF_2A:
        return (rad, b)
    return (projective_cover(alg, rad), b)


@functools.cache
def _inverse_table(alg: NakayamaAlgebra) -> Dict[Pair, Pair]:
    table: Dict[Pair, Pair] = {}
    for b, c in itertools.permutations(alg.indecomposables(), 2):
        if not is_tau_rigid(alg, (b, c)) or not is_tf_ordered(alg, (b, c)):
            continue
        image = _mutate(alg, b, c)
        if image in table:
            raise InvariantViolation(
                f"pair mutation is not injective: {table[image]} and {(b, c)} -> {image}",
                (table[image], (b, c), image),
            )
        table[image] = (b, c)
    logger.debug("Inverse pair-mutation table over %s has %d entries", alg, len(table))
    return table


def _inverse(alg: NakayamaAlgebra, u: Ind, v: Ind) -> Pair:
    _tf_pair(alg, u, v)
    try:
        return _inverse_table(alg)[(u, v)]
    except KeyError:
        raise InvariantViolation(
            f"{alg.label(u)} (+) {alg.label(v)} is not the mutation of any pair", (u, v)
        ) from None


def _in(ctx: WideContext, *ys: Ind) -> Tuple[Ind, ...]:
    return tuple(ctx.abstract_of(y) for y in ys)


def _out(ctx: WideContext, pair: Pair) -> Pair:
    return (ctx.to_ambient[pair[0]], ctx.to_ambient[pair[1]])


def classify_case(ctx: WideContext, b: Ind, c: Ind) -> CaseTag:
    """Case of the TF-ordered pair B (+) C, relative to ``ctx``."""
    return _classify(ctx.abstract, *_in(ctx, b, c))


def mutate_pair(ctx: WideContext, b: Ind, c: Ind) -> Pair:
    """Left mutation of the TF-ordered pair B (+) C inside ``ctx``."""
    return _out(ctx, _mutate(ctx.abstract, *_in(ctx, b, c)))


def mutate_pair_inverse(ctx: WideContext, u: Ind, v: Ind) -> Pair:
    """The unique TF-ordered pair whose left mutation is U (+) V."""
    return _out(ctx, _inverse(ctx.abstract, *_in(ctx, u, v)))


def tf_pairs(alg: NakayamaAlgebra) -> Tuple[Pair, ...]:
    """All TF-ordered tau-rigid pairs over ``alg``."""
    return tuple(_inverse_table(alg).values())


@functools.cache
def _mutate_sequence(alg: NakayamaAlgebra, b: Ind, c: Ind) -> Pair:
    module = psi_inv_whole(alg, (b, c))
    first, second = psi_whole(alg, _mutate(alg, *module))
    return (first, second)


@functools.cache
def _mutate_sequence_inverse(alg: NakayamaAlgebra, b: Ind, c: Ind) -> Pair:
    module = psi_inv_whole(alg, (b, c))
    first, second = psi_whole(alg, _inverse(alg, *module))
    return (first, second)


def mutate_sequence_pair(ctx: WideContext, b: Ind, c: Ind) -> Pair:
    """Mutation of the tau-exceptional pair (B, C) of ``ctx``, Psi . mutate . Psi^-1."""
    return _out(ctx, _mutate_sequence(ctx.abstract, *_in(ctx, b, c)))


def mutate_sequence_pair_inverse(ctx: WideContext, b: Ind, c: Ind) -> Pair:
    return _out(ctx, _mutate_sequence_inverse(ctx.abstract, *_in(ctx, b, c)))
