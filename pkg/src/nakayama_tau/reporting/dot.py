"""DOT rendering of the Auslander-Reiten quiver of a connected Nakayama algebra."""

from __future__ import annotations

import io
from typing import Dict, Optional, Sequence

from ..algebra.models import Ind, NakayamaAlgebra
from ..errors import UsageError
from ..reduction.context import build_context, describe

_COLOURS = ("forestgreen", "royalblue", "darkorange", "firebrick", "purple")


def _node_id(ind: Ind) -> str:
    return f"m{ind.top}_{ind.length}"


def ar_edges(alg: NakayamaAlgebra) -> list[tuple[Ind, Ind]]:
    """Irreducible maps: epis M(t,l) -> M(t,l-1) and monos M(t,l) -> M(t+1,l+1)."""
    comp = alg.components[0]
    edges = []
    for x in alg.indecomposables():
        if x.length >= 2:
            edges.append((x, Ind(0, x.top, x.length - 1)))
        grow = Ind(0, comp.vertex(x.top + 1), x.length + 1)
        if alg.is_valid(grow):
            edges.append((x, grow))
    return edges


def emit_ar_dot(alg: NakayamaAlgebra, highlight: Optional[Sequence[Ind]] = None) -> str:
    """DOT digraph of the AR-quiver, with J(highlight) drawn as one cluster per component."""
    if not alg.is_connected:
        raise UsageError(f"ar-dot needs a connected algebra, got {alg}")
    colour: Dict[Ind, int] = {}
    output = io.StringIO()
    print(f'digraph "{alg}" {{', file=output)
    print("  rankdir=LR;", file=output)
    print('  node [shape=plaintext, fontname="Helvetica"];', file=output)

    if highlight:
        ctx = build_context(alg, highlight)
        print(f'  label="{describe(ctx)}";', file=output)
        for comp in ctx.comps:
            c = _COLOURS[comp.index % len(_COLOURS)]
            print(f"  subgraph cluster_{comp.index} {{", file=output)
            print(f'    label="{comp.component}"; color={c}; fontcolor={c};', file=output)
            for y in comp.members:
                colour[y] = comp.index
                print(f'    {_node_id(y)} [label="{y}", fontcolor={c}];', file=output)
            print("  }", file=output)
        for x in highlight:
            print(f'  {_node_id(x)} [label="{x}", shape=box];', file=output)

    for x in alg.indecomposables():
        if x not in colour and not (highlight and x in highlight):
            print(f'  {_node_id(x)} [label="{x}"];', file=output)

    for src, dst in ar_edges(alg):
        style = "solid" if src.length > dst.length else "dashed"
        print(f"  {_node_id(src)} -> {_node_id(dst)} [style={style}];", file=output)

    print("}", file=output)
    result = output.getvalue()
    output.close()
    return result
