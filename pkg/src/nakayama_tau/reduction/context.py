"""
tau-perpendicular (Jasso) contexts.

A context J(M) = M^perp ∩ ^perp(tau M) is materialised as its member set plus a
presentation as the module category of an abstract Nakayama algebra. The
presentation is computed from the member set alone:

* components are the connected pieces of the graph whose edges are non-zero
  Hom or Ext^1 between members;
* the relative length of a member is the number of its ambient submodules that
  are members;
* relative projectives are members without outgoing relative Ext^1;
* a component is cyclic iff it has rank >= 2 and all relative projectives share
  a relative length;
* abstract vertex labels follow relative radicals of relative projectives.

Relative operations translate into the abstract algebra, compute there and
translate back.
"""

from __future__ import annotations

import functools
import logging
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, List, Mapping, Sequence, Tuple

import networkx as nx

from ..algebra.models import Component, Ind, Kind, MaybeInd, NakayamaAlgebra
from ..errors import InvariantViolation, UsageError
from ..homcalc.uniserial import (
    ext1_nonzero,
    hom_nonzero,
    projective_cover,
    quotient_top,
    radk,
    submodule,
    tau,
)
from ..taurigid.rigidity import bongartz, cobongartz, is_tau_rigid

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AbstractComponent:
    """One connected piece of a context and the abstract component presenting it."""

    index: int
    component: Component
    members: Tuple[Ind, ...]

    @property
    def kind(self) -> Kind:
        return self.component.kind

    @property
    def rank(self) -> int:
        return self.component.rank


@dataclass(frozen=True, eq=False)
class WideContext:
    ambient: NakayamaAlgebra
    reducer: Tuple[Ind, ...]
    members: FrozenSet[Ind]
    comps: Tuple[AbstractComponent, ...]
    abstract: NakayamaAlgebra
    to_abstract: Mapping[Ind, Ind]
    to_ambient: Mapping[Ind, Ind]

    def abstract_of(self, y: Ind) -> Ind:
        try:
            return self.to_abstract[y]
        except KeyError:
            raise UsageError(
                f"{self.ambient.label(y)} is not in the context {describe(self)}"
            ) from None

    def ambient_of(self, a: MaybeInd) -> MaybeInd:
        return None if a is None else self.to_ambient[a]

    def component_of(self, y: Ind) -> AbstractComponent:
        return self.comps[self.abstract_of(y).comp]

    def lift(self, fn: Callable[[NakayamaAlgebra, Ind], MaybeInd], y: Ind) -> MaybeInd:
        """Apply an abstract-algebra operation to a member."""
        return self.ambient_of(fn(self.abstract, self.abstract_of(y)))

    def lift_many(
        self, fn: Callable[[NakayamaAlgebra, Ind], Sequence[Ind]], y: Ind
    ) -> Tuple[Ind, ...]:
        return tuple(sorted(self.to_ambient[a] for a in fn(self.abstract, self.abstract_of(y))))

    def sorted_members(self) -> Tuple[Ind, ...]:
        return tuple(sorted(self.members))


def describe(ctx: WideContext) -> str:
    if not ctx.reducer:
        return f"mod {ctx.ambient}"
    return "J(" + ",".join(ctx.ambient.label(x) for x in ctx.reducer) + ")"


# Presentation ---------------------------------------------------------------


@dataclass(frozen=True)
class _Presentation:
    comps: Tuple[AbstractComponent, ...]
    abstract: NakayamaAlgebra
    to_abstract: Dict[Ind, Ind]


def _linked(alg: NakayamaAlgebra, y: Ind, z: Ind) -> bool:
    return (
        hom_nonzero(alg, y, z)
        or hom_nonzero(alg, z, y)
        or ext1_nonzero(alg, y, z)
        or ext1_nonzero(alg, z, y)
    )


def _member_components(
    alg: NakayamaAlgebra, members: FrozenSet[Ind]
) -> List[Tuple[Ind, ...]]:
    graph = nx.Graph()
    ordered = sorted(members)
    graph.add_nodes_from(ordered)
    for i, y in enumerate(ordered):
        for z in ordered[i + 1 :]:
            if y.comp == z.comp and _linked(alg, y, z):
                graph.add_edge(y, z)
    groups = [tuple(sorted(g)) for g in nx.connected_components(graph)]
    return sorted(groups, key=lambda g: g[0])


def _present_group(
    alg: NakayamaAlgebra, index: int, group: Tuple[Ind, ...]
) -> Tuple[AbstractComponent, Dict[Ind, Ind]]:
    inside = set(group)
    chains: Dict[Ind, List[Ind]] = {}
    for y in group:
        chains[y] = [
            s for s in (submodule(alg, y, j) for j in range(1, y.length + 1)) if s in inside
        ]

    def rel_top(y: Ind) -> Ind:
        chain = chains[y]
        if len(chain) == 1:
            return y
        return quotient_top(alg, y, y.length - chain[-2].length)

    simples = [y for y in group if len(chains[y]) == 1]
    projectives = [
        y for y in group if not any(ext1_nonzero(alg, y, z) for z in group)
    ]
    rank = len(simples)
    cover: Dict[Ind, Ind] = {}
    for q in projectives:
        s = rel_top(q)
        if s not in simples or s in cover:
            raise InvariantViolation(
                f"relative projective {q} has no distinct relative top", (q, s)
            )
        cover[s] = q
    if len(cover) != rank:
        raise InvariantViolation(
            f"{rank} relative simples but {len(cover)} relative projectives", tuple(group)
        )

    lengths = {len(chains[q]) for q in projectives}
    kind = Kind.C if rank >= 2 and len(lengths) == 1 else Kind.A
    labels: Dict[Ind, int] = {}
    if kind is Kind.A:
        for s, q in cover.items():
            labels[s] = len(chains[q]) - 1
    else:
        if lengths != {rank}:
            raise InvariantViolation(
                f"cyclic component of rank {rank} with projective lengths {lengths}",
                tuple(projectives),
            )
        s = min(simples)
        for k in range(rank):
            labels[s] = (-k) % rank
            rad = chains[cover[s]][-2]
            s = rel_top(rad)
    if sorted(labels.values()) != list(range(rank)):
        raise InvariantViolation(f"inconsistent vertex labels {labels}", tuple(simples))

    comp = Component(kind, rank)
    mapping: Dict[Ind, Ind] = {}
    for y in group:
        a = Ind(index, labels[rel_top(y)], len(chains[y]))
        if a in mapping.values():
            raise InvariantViolation(f"two members present as {a}", (y,))
        mapping[y] = a
    if len(mapping) != comp.module_count():
        raise InvariantViolation(
            f"{len(mapping)} members cannot present {comp}", tuple(group)
        )
    return AbstractComponent(index, comp, group), mapping


@functools.cache
def _present(alg: NakayamaAlgebra, members: FrozenSet[Ind]) -> _Presentation:
    groups = _member_components(alg, members)
    comps: List[AbstractComponent] = []
    to_abstract: Dict[Ind, Ind] = {}
    for index, group in enumerate(groups):
        comp, mapping = _present_group(alg, index, group)
        comps.append(comp)
        to_abstract.update(mapping)
    abstract = NakayamaAlgebra(tuple(c.component for c in comps))
    for y, a in to_abstract.items():
        if not abstract.is_valid(a):
            raise InvariantViolation(f"{y} presents as invalid {a}", (y, a))
    return _Presentation(tuple(comps), abstract, to_abstract)


def context_from_members(
    alg: NakayamaAlgebra, reducer: Sequence[Ind], members: FrozenSet[Ind]
) -> WideContext:
    pres = _present(alg, frozenset(members))
    ctx = WideContext(
        ambient=alg,
        reducer=tuple(reducer),
        members=frozenset(members),
        comps=pres.comps,
        abstract=pres.abstract,
        to_abstract=pres.to_abstract,
        to_ambient={a: y for y, a in pres.to_abstract.items()},
    )
    if ctx.abstract.rank + len(ctx.reducer) != alg.rank:
        raise InvariantViolation(
            f"{describe(ctx)} has rank {ctx.abstract.rank} in {alg}", ctx.reducer
        )
    return ctx


# Construction ---------------------------------------------------------------


def perpendicular_members(alg: NakayamaAlgebra, reducer: Sequence[Ind]) -> FrozenSet[Ind]:
    """Indecomposables Y with Hom(M_i, Y) = 0 and Hom(Y, tau M_i) = 0."""
    taus = [t for t in (tau(alg, x) for x in reducer) if t is not None]
    return frozenset(
        y
        for y in alg.indecomposables()
        if not any(hom_nonzero(alg, x, y) for x in reducer)
        and not any(hom_nonzero(alg, y, t) for t in taus)
    )


def build_context(alg: NakayamaAlgebra, reducer: Sequence[Ind]) -> WideContext:
    """J(reducer); contexts are cached per algebra and reducer."""
    return _build_context(alg, tuple(reducer))


@functools.cache
def _build_context(alg: NakayamaAlgebra, reducer: Tuple[Ind, ...]) -> WideContext:
    alg.check(*reducer)
    if len(set(reducer)) != len(reducer):
        raise UsageError("reducer summands must be pairwise distinct")
    if not is_tau_rigid(alg, reducer):
        raise UsageError(
            "reducer is not tau-rigid: " + ",".join(alg.label(x) for x in reducer)
        )
    logger.debug("Building context J(%s) over %s", ",".join(map(str, reducer)), alg)
    return context_from_members(alg, reducer, perpendicular_members(alg, reducer))


def whole_category(alg: NakayamaAlgebra) -> WideContext:
    return build_context(alg, ())


def sequence_context(alg: NakayamaAlgebra, seq: Sequence[Ind]) -> WideContext:
    """J(A_1, ..., A_t) by the recursion J_{J(A_2, ..., A_t)}(A_1)."""
    return _sequence_context(alg, tuple(seq))


@functools.cache
def _sequence_context(alg: NakayamaAlgebra, seq: Tuple[Ind, ...]) -> WideContext:
    if not seq:
        return whole_category(alg)
    outer = _sequence_context(alg, seq[1:])
    head = outer.abstract_of(seq[0])
    inner = build_context(outer.abstract, (head,))
    members = frozenset(outer.to_ambient[a] for a in inner.members)
    return context_from_members(alg, seq, members)


# Relative operations ----------------------------------------------------------


def rel_tau(ctx: WideContext, y: Ind) -> MaybeInd:
    return ctx.lift(tau, y)


def rel_radk(ctx: WideContext, y: Ind, k: int) -> MaybeInd:
    return ctx.lift(lambda a, x: radk(a, x, k), y)


def rel_length(ctx: WideContext, y: Ind) -> int:
    return ctx.abstract_of(y).length


def rel_is_projective(ctx: WideContext, y: Ind) -> bool:
    return ctx.abstract.is_projective(ctx.abstract_of(y))


def rel_projectives(ctx: WideContext) -> Tuple[Ind, ...]:
    return tuple(sorted(ctx.to_ambient[p] for p in ctx.abstract.projectives()))


def rel_proj_cover(ctx: WideContext, y: Ind) -> Ind:
    cover = ctx.lift(projective_cover, y)
    assert cover is not None
    return cover


def rel_bongartz(ctx: WideContext, b: Ind) -> Tuple[Ind, ...]:
    return ctx.lift_many(bongartz, b)


def rel_cobongartz(ctx: WideContext, b: Ind) -> Tuple[Ind, ...]:
    return ctx.lift_many(cobongartz, b)


def rel_is_tau_rigid(ctx: WideContext, m: Sequence[Ind]) -> bool:
    return is_tau_rigid(ctx.abstract, tuple(ctx.abstract_of(y) for y in m))


def rel_ext_nonzero(ctx: WideContext, y: Ind, z: Ind) -> bool:
    return ext1_nonzero(ctx.abstract, ctx.abstract_of(y), ctx.abstract_of(z))

