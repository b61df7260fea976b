"""
Linear-algebra oracle: explicit quiver representations of indecomposables.

A module is realised with one basis vector per composition factor and 0/1 arrow
matrices. Hom is the solution space of the intertwiner equations; Ext^1 is
cocycles modulo coboundaries, where a cocycle is the off-diagonal arrow data of a
middle term E = Y (+) X. On cyclic components the middle term must still satisfy
the relation that every path of full length acts as zero, which is linear in the
cocycle.

Used to cross-check the closed formulas in ``uniserial``; not on any hot path.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np

from ..algebra.models import Component, Ind, NakayamaAlgebra

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Representation:
    """Dimension vector and arrow matrices; ``arrows[v]`` acts along v -> v-1."""

    component: Component
    dims: Tuple[int, ...]
    arrows: Dict[int, np.ndarray]


def arrow_sources(comp: Component) -> List[int]:
    """Vertices with an outgoing arrow."""
    if comp.is_cyclic:
        return list(range(comp.rank))
    return list(range(1, comp.rank))


def representation(alg: NakayamaAlgebra, x: Ind) -> Representation:
    comp = alg.component(x)
    index = {comp.vertex(x.top - k): k for k in range(x.length)}
    dims = tuple(1 if v in index else 0 for v in range(comp.rank))
    arrows: Dict[int, np.ndarray] = {}
    for v in arrow_sources(comp):
        w = comp.vertex(v - 1)
        mat = np.zeros((dims[w], dims[v]))
        k = index.get(v)
        if k is not None and k + 1 < x.length:
            mat[0, 0] = 1.0
        arrows[v] = mat
    return Representation(comp, dims, arrows)


def _rank(mat: np.ndarray) -> int:
    if mat.size == 0:
        return 0
    return int(np.linalg.matrix_rank(mat))


def _offsets(shapes: List[Tuple[int, int]]) -> Tuple[List[int], int]:
    offsets, pos = [], 0
    for rows, cols in shapes:
        offsets.append(pos)
        pos += rows * cols
    return offsets, pos


def _place(
    out: np.ndarray, row: int, col: int, left: np.ndarray, right: np.ndarray
) -> None:
    """Add the matrix of ``d -> left @ d @ right`` (column-major vec) at (row, col)."""
    if left.size == 0 or right.size == 0:
        return
    block = np.kron(right.T, left)
    out[row : row + block.shape[0], col : col + block.shape[1]] += block


def _coboundary(rx: Representation, ry: Representation) -> np.ndarray:
    """Matrix of h -> (Y_a h_v - h_w X_a)_a; its kernel is Hom(X, Y)."""
    comp = rx.component
    h_shapes = [(ry.dims[v], rx.dims[v]) for v in range(comp.rank)]
    h_off, n_h = _offsets(h_shapes)
    sources = arrow_sources(comp)
    d_shapes = [(ry.dims[comp.vertex(v - 1)], rx.dims[v]) for v in sources]
    d_off, n_d = _offsets(d_shapes)
    mat = np.zeros((n_d, n_h))
    for i, v in enumerate(sources):
        w = comp.vertex(v - 1)
        _place(mat, d_off[i], h_off[v], ry.arrows[v], np.eye(rx.dims[v]))
        _place(mat, d_off[i], h_off[w], -np.eye(ry.dims[w]), rx.arrows[v])
    return mat


def _relation_constraints(rx: Representation, ry: Representation) -> np.ndarray:
    """Upper-right blocks of full-length path products in E, as a linear map."""
    comp = rx.component
    sources = arrow_sources(comp)
    if not comp.is_cyclic:
        d_shapes = [(ry.dims[comp.vertex(v - 1)], rx.dims[v]) for v in sources]
        return np.zeros((0, _offsets(d_shapes)[1]))
    m = comp.rank
    d_shapes = [(ry.dims[comp.vertex(v - 1)], rx.dims[v]) for v in sources]
    d_off, n_d = _offsets(d_shapes)
    blocks = []
    for start in range(m):
        path = [comp.vertex(start - i) for i in range(m)]
        block = np.zeros((ry.dims[start] * rx.dims[start], n_d))
        for k, s in enumerate(path):
            left = np.eye(ry.dims[start])
            for later in reversed(path[k + 1 :]):
                left = left @ ry.arrows[later]
            right = np.eye(rx.dims[start])
            for earlier in path[:k]:
                right = rx.arrows[earlier] @ right
            _place(block, 0, d_off[s], left, right)
        blocks.append(block)
    return np.vstack(blocks)


def hom_dimension(alg: NakayamaAlgebra, x: Ind, y: Ind) -> int:
    if x.comp != y.comp:
        return 0
    rx, ry = representation(alg, x), representation(alg, y)
    mat = _coboundary(rx, ry)
    return mat.shape[1] - _rank(mat)


def ext1_dimension(alg: NakayamaAlgebra, x: Ind, y: Ind) -> int:
    if x.comp != y.comp:
        return 0
    rx, ry = representation(alg, x), representation(alg, y)
    cob = _coboundary(rx, ry)
    rel = _relation_constraints(rx, ry)
    cocycles = cob.shape[0] - _rank(rel)
    dim = cocycles - _rank(cob)
    logger.debug("Ext^1(%s, %s) = %d", x, y, dim)
    return dim
