"""Parsing and printing of algebra, module and sequence literals.

Grammar::

    algebra  := part ("x" part)*          part := ("A" | "C") digits
    module   := [digits ":"] "M(" int "," int ")"
    sequence := "[" [module ("," module)*] "]"
"""

from __future__ import annotations

import re
from typing import Iterable, Optional, Tuple

from ..errors import LiteralError, UsageError
from .models import Component, Ind, Kind, NakayamaAlgebra

_PART = re.compile(r"\s*([AaCc])(\d+)\s*")
_MODULE = re.compile(r"\s*(?:(\d+)\s*:\s*)?[Mm]\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*")


def parse_algebra(text: str) -> NakayamaAlgebra:
    """Parse ``C6``, ``A4`` or products such as ``A2xC3``."""
    parts: list[Component] = []
    pos = 0
    while True:
        m = _PART.match(text, pos)
        if m is None:
            raise LiteralError("expected A<rank> or C<rank>", text, pos)
        rank = int(m.group(2))
        if rank < 1:
            raise LiteralError("rank must be positive", text, m.start(2))
        parts.append(Component(Kind(m.group(1).upper()), rank))
        pos = m.end()
        if pos == len(text):
            break
        if text[pos] not in "xX":
            raise LiteralError("expected 'x' between components", text, pos)
        pos += 1
    return NakayamaAlgebra(tuple(parts))


def _module_at(alg: NakayamaAlgebra, text: str, pos: int) -> Tuple[Ind, int]:
    m = _MODULE.match(text, pos)
    if m is None:
        raise LiteralError("expected M(t,l)", text, pos)
    prefix, top, length = m.group(1), int(m.group(2)), int(m.group(3))
    if prefix is None:
        if not alg.is_connected:
            raise LiteralError(
                f"component prefix required for product algebra {alg}", text, m.start()
            )
        comp = 0
    else:
        comp = int(prefix)
    ind = Ind(comp, top, length)
    try:
        alg.check(ind)
    except UsageError as exc:
        raise LiteralError(str(exc), text, m.start()) from exc
    return ind, m.end()


def parse_module(alg: NakayamaAlgebra, text: str) -> Ind:
    """Parse ``M(t,l)`` or ``c:M(t,l)`` and validate it against ``alg``."""
    ind, end = _module_at(alg, text, 0)
    if end != len(text):
        raise LiteralError("trailing characters", text, end)
    return ind


def parse_sequence(alg: NakayamaAlgebra, text: str) -> Tuple[Ind, ...]:
    """Parse ``[M(0,1),M(1,2)]``; a bare module is read as a one-entry list."""
    stripped = text.strip()
    if not stripped.startswith("["):
        return (parse_module(alg, stripped),)
    offset = text.index("[") + 1
    close = text.rfind("]")
    if close < offset - 1 or text[close + 1 :].strip():
        raise LiteralError("expected closing ']'", text, len(text))
    entries: list[Ind] = []
    pos = offset
    if text[offset:close].strip():
        while True:
            ind, pos = _module_at(alg, text, pos)
            entries.append(ind)
            if pos == close:
                break
            if text[pos] != ",":
                raise LiteralError("expected ',' or ']'", text, pos)
            pos += 1
    if len(set(entries)) != len(entries):
        raise LiteralError("entries must be pairwise distinct", text, offset)
    return tuple(entries)


def parse_partial_sequence(
    alg: NakayamaAlgebra, text: str
) -> Tuple[Optional[Ind], ...]:
    """Parse a sequence in which exactly one entry may be the hole ``_``."""
    stripped = text.strip()
    if not (stripped.startswith("[") and stripped.endswith("]")):
        raise LiteralError("expected '[...]'", text, 0)
    pieces = [p.strip() for p in stripped[1:-1].split(",")]
    # modules contain a comma themselves, so re-join "M(t" + "l)" fragments
    merged: list[str] = []
    for piece in pieces:
        if merged and merged[-1].count("(") > merged[-1].count(")"):
            merged[-1] += "," + piece
        else:
            merged.append(piece)
    out: list[Optional[Ind]] = []
    for piece in merged:
        out.append(None if piece == "_" else parse_module(alg, piece))
    if out.count(None) != 1:
        raise LiteralError("exactly one hole '_' is required", text, 0)
    return tuple(out)


def format_algebra(alg: NakayamaAlgebra) -> str:
    return str(alg)


def format_module(alg: NakayamaAlgebra, ind: Ind) -> str:
    return alg.label(ind)


def format_sequence(alg: NakayamaAlgebra, entries: Iterable[Ind]) -> str:
    return "[" + ",".join(alg.label(e) for e in entries) + "]"
