"""
Closed-form Hom, Ext, AR-translate and trace arithmetic for uniserial modules.

Every map between indecomposables factors as an epimorphism onto a top quotient
of the source followed by a monomorphism onto a submodule of the target, so a
non-zero map is determined, up to scalar, by the length of its image.
"""

from __future__ import annotations

import functools
from typing import Iterable, Sequence, Tuple

from ..algebra.models import Ind, MaybeInd, NakayamaAlgebra
from ..errors import UsageError


@functools.cache
def hom_overlap(alg: NakayamaAlgebra, x: Ind, y: Ind) -> int:
    """Length of the image of a non-zero map ``x -> y``, or 0 if Hom vanishes.

    The image has top ``S(x.top)`` and sits as the length-j submodule of ``y``,
    whose top is ``y.top - y.length + j``.
    """
    alg.check(x, y)
    if x.comp != y.comp:
        return 0
    comp = alg.components[x.comp]
    for j in range(1, min(x.length, y.length) + 1):
        if comp.vertex(y.top - y.length + j) == x.top:
            return j
    return 0


def hom_nonzero(alg: NakayamaAlgebra, x: Ind, y: Ind) -> bool:
    return hom_overlap(alg, x, y) > 0


def tau(alg: NakayamaAlgebra, x: Ind) -> MaybeInd:
    """Auslander-Reiten translate: M(t, l) -> M(t-1, l), zero on projectives."""
    if alg.is_projective(x):
        return None
    return Ind(x.comp, alg.components[x.comp].vertex(x.top - 1), x.length)


def radk(alg: NakayamaAlgebra, x: Ind, k: int) -> MaybeInd:
    """k-th radical M(t-k, l-k)."""
    alg.check(x)
    if k < 0:
        raise UsageError(f"radical power must be non-negative, got {k}")
    if k >= x.length:
        return None
    return Ind(x.comp, alg.components[x.comp].vertex(x.top - k), x.length - k)


def quotient_top(alg: NakayamaAlgebra, x: Ind, k: int) -> MaybeInd:
    """The length-k top quotient ``x / rad^k x``."""
    alg.check(x)
    if not 0 <= k <= x.length:
        raise UsageError(f"cannot take a length-{k} quotient of {x}")
    if k == 0:
        return None
    return Ind(x.comp, x.top, k)


def submodule(alg: NakayamaAlgebra, x: Ind, j: int) -> MaybeInd:
    """The length-j submodule of ``x``; uniserial modules have exactly one."""
    alg.check(x)
    if not 0 <= j <= x.length:
        raise UsageError(f"{x} has no submodule of length {j}")
    if j == 0:
        return None
    return Ind(x.comp, alg.components[x.comp].vertex(x.top - x.length + j), j)


def composition_factors(alg: NakayamaAlgebra, x: Ind) -> Tuple[int, ...]:
    """Vertices of the composition factors from top to socle."""
    comp = alg.component(x)
    return tuple(comp.vertex(x.top - i) for i in range(x.length))


def projective_cover(alg: NakayamaAlgebra, x: Ind) -> Ind:
    alg.check(x)
    return alg.projective(x.comp, x.top)


def gen_member(alg: NakayamaAlgebra, x: Ind, m: Iterable[Ind]) -> bool:
    """Whether ``x`` lies in Gen(m).

    Over a Nakayama algebra an indecomposable in Gen(m) is already a quotient of
    a single summand, i.e. a summand with the same top and at least its length.
    """
    return any(
        s.comp == x.comp and s.top == x.top and s.length >= x.length for s in m
    )


def trace_len(alg: NakayamaAlgebra, m: Sequence[Ind], x: Ind) -> int:
    """Length of the trace of ``m`` in ``x``."""
    for j in range(x.length, 0, -1):
        sub = submodule(alg, x, j)
        if gen_member(alg, sub, m):
            return j
    return 0


def f_of(alg: NakayamaAlgebra, m: Sequence[Ind], x: Ind) -> MaybeInd:
    """The cokernel of the trace, ``x / t_m(x)``."""
    return quotient_top(alg, x, x.length - trace_len(alg, m, x))


def ell_gt(alg: NakayamaAlgebra, vertex: int, y: Ind) -> int:
    """Length of the trace of P(vertex) in ``y`` (cyclic components only)."""
    comp = alg.component(y)
    if not comp.is_cyclic:
        raise UsageError(f"{y} does not lie in a cyclic component")
    return trace_len(alg, (alg.projective(y.comp, vertex),), y)


@functools.cache
def ext1_nonzero(alg: NakayamaAlgebra, x: Ind, y: Ind) -> bool:
    """Whether Ext^1(x, y) is non-zero.

    Read off the projective presentation 0 -> rad^l P -> P -> x -> 0 with
    P = P(x.top): Ext^1 is the cokernel of Hom(P, y) -> Hom(rad^l P, y). A map
    P -> y with image length j restricts non-trivially to rad^l P iff j > l.
    """
    alg.check(x, y)
    if x.comp != y.comp or alg.is_projective(x):
        return False
    cover = alg.projective(x.comp, x.top)
    syzygy = radk(alg, cover, x.length)
    if hom_overlap(alg, syzygy, y) == 0:
        return False
    return hom_overlap(alg, cover, y) <= x.length


def stable_ext1_nonzero(alg: NakayamaAlgebra, x: Ind, y: Ind) -> bool:
    """Ext^1(x, y) as stable Hom(y, tau x) modulo maps through projectives.

    Only valid on self-injective (cyclic) components, where every map factoring
    through an injective also factors through a projective.
    """
    t = tau(alg, x)
    if t is None or hom_overlap(alg, y, t) == 0:
        return False
    for p in alg.projectives():
        j1 = hom_overlap(alg, y, p)
        j2 = hom_overlap(alg, p, t)
        if j1 and j2 and j1 + j2 > p.length:
            return False
    return True
