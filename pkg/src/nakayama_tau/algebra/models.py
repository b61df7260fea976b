"""
Algebra descriptors and indecomposable modules for products of linear and
cyclic Nakayama algebras.

Conventions: vertices of a rank-m component are 0..m-1 and arrows go i -> i-1
(mod m for cyclic components), so that rad M(t, l) = M(t-1, l-1). The module
M(t, l) has composition factors S(t), S(t-1), ..., S(t-l+1).
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

from ..errors import UsageError


class Kind(str, enum.Enum):
    """Shape of a connected component."""

    A = "A"  # linear, hereditary
    C = "C"  # cyclic, radical^m = 0


@dataclass(frozen=True)
class Component:
    """A connected Nakayama algebra A_m or C_m."""

    kind: Kind
    rank: int

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise UsageError(f"component rank must be positive, got {self.rank}")
        object.__setattr__(self, "kind", Kind(self.kind))
        # C_1 = A_1
        if self.kind is Kind.C and self.rank == 1:
            object.__setattr__(self, "kind", Kind.A)

    @property
    def is_cyclic(self) -> bool:
        return self.kind is Kind.C

    def vertex(self, v: int) -> int:
        """Reduce a vertex label; cyclic components wrap around."""
        return v % self.rank if self.is_cyclic else v

    def projective_length(self, top: int) -> int:
        return self.rank if self.is_cyclic else top + 1

    def module_count(self) -> int:
        m = self.rank
        return m * m if self.is_cyclic else m * (m + 1) // 2

    def __str__(self) -> str:
        return f"{self.kind.value}{self.rank}"


@dataclass(frozen=True, order=True)
class Ind:
    """The indecomposable module with top S(top) and the given length.

    Ordering is the canonical one: component, then top, then length.
    """

    comp: int
    top: int
    length: int

    def label(self, with_component: bool = False) -> str:
        body = f"M({self.top},{self.length})"
        return f"{self.comp}:{body}" if with_component else body

    def __str__(self) -> str:
        return self.label()


MaybeInd = Optional[Ind]
"""An indecomposable module or ``None`` for the zero module."""

OrderedModule = Tuple[Ind, ...]
"""Ordered direct sum of pairwise distinct indecomposables."""


@dataclass(frozen=True)
class NakayamaAlgebra:
    """An ordered product of connected components, e.g. A2 x C3."""

    components: Tuple[Component, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", tuple(self.components))

    @classmethod
    def cyclic(cls, n: int) -> "NakayamaAlgebra":
        return cls((Component(Kind.C, n),))

    @classmethod
    def linear(cls, m: int) -> "NakayamaAlgebra":
        return cls((Component(Kind.A, m),))

    @classmethod
    def product(cls, *parts: "NakayamaAlgebra") -> "NakayamaAlgebra":
        comps: list[Component] = []
        for part in parts:
            comps.extend(part.components)
        return cls(tuple(comps))

    @property
    def rank(self) -> int:
        return sum(c.rank for c in self.components)

    @property
    def is_connected(self) -> bool:
        return len(self.components) == 1

    def __str__(self) -> str:
        return "x".join(str(c) for c in self.components) or "0"

    # Modules -----------------------------------------------------------
    def component(self, ind: Ind) -> Component:
        self.check(ind)
        return self.components[ind.comp]

    def is_valid(self, ind: Ind) -> bool:
        if not 0 <= ind.comp < len(self.components):
            return False
        c = self.components[ind.comp]
        if not 0 <= ind.top < c.rank:
            return False
        return 1 <= ind.length <= c.projective_length(ind.top)

    def check(self, *inds: Ind) -> None:
        """Raise ``UsageError`` unless every module is valid over this algebra."""
        for ind in inds:
            if self.is_valid(ind):
                continue
            if not 0 <= ind.comp < len(self.components):
                raise UsageError(f"{ind.label(True)}: no component {ind.comp} in {self}")
            c = self.components[ind.comp]
            if not 0 <= ind.top < c.rank:
                raise UsageError(f"{ind}: vertex {ind.top} out of range for {c}")
            if ind.length > c.projective_length(ind.top):
                raise UsageError(f"{ind}: length exceeds rank of {c}")
            raise UsageError(f"{ind}: length must be positive")

    def module(self, comp: int, top: int, length: int) -> Ind:
        """Build M(top, length) in a component, reducing the vertex as needed."""
        ind = Ind(comp, self.components[comp].vertex(top), length)
        self.check(ind)
        return ind

    def projective(self, comp: int, top: int) -> Ind:
        c = self.components[comp]
        t = c.vertex(top)
        return Ind(comp, t, c.projective_length(t))

    def is_projective(self, ind: Ind) -> bool:
        return ind.length == self.component(ind).projective_length(ind.top)

    def projectives(self) -> Tuple[Ind, ...]:
        return tuple(
            self.projective(i, t)
            for i, c in enumerate(self.components)
            for t in range(c.rank)
        )

    def indecomposables(self) -> Tuple[Ind, ...]:
        return _indecomposables(self)

    def iter_component(self, comp: int) -> Iterator[Ind]:
        c = self.components[comp]
        for t in range(c.rank):
            for l in range(1, c.projective_length(t) + 1):
                yield Ind(comp, t, l)

    def label(self, ind: Ind) -> str:
        """Literal form of a module: the component prefix only for products."""
        return ind.label(with_component=not self.is_connected)


@functools.cache
def _indecomposables(alg: NakayamaAlgebra) -> Tuple[Ind, ...]:
    return tuple(ind for i in range(len(alg.components)) for ind in alg.iter_component(i))


def indecomposables(alg: NakayamaAlgebra) -> Tuple[Ind, ...]:
    """All indecomposable modules in canonical order (component, top, length)."""
    return alg.indecomposables()


def is_projective(alg: NakayamaAlgebra, ind: Ind) -> bool:
    return alg.is_projective(ind)
