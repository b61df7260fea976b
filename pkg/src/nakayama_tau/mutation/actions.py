"""
The action of the free group on complete tau-exceptional sequences.

phi_i mutates the adjacent entries (A_i, A_{i+1}) inside J(A_{i+2}, ..., A_t),
indices 1-based. A word ``r1 r2 r1'`` acts right to left, ``'`` marking inverses.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import networkx as nx

from ..algebra.models import Ind, NakayamaAlgebra
from ..errors import LiteralError, UsageError
from ..reduction.context import WideContext, build_context, whole_category
from ..sequences.enumeration import TauExcSeq, enumerate_complete
from ..sequences.psi import psi_inv_whole
from .pairs import mutate_sequence_pair, mutate_sequence_pair_inverse

logger = logging.getLogger(__name__)

_LETTER = re.compile(r"\s*[rRρ]_?(\d+)(\^-1|'|⁻¹)?\s*")


@dataclass(frozen=True)
class Letter:
    index: int
    inverse: bool = False

    def __str__(self) -> str:
        return f"r{self.index}" + ("'" if self.inverse else "")


@dataclass(frozen=True)
class MutationWord:
    letters: Tuple[Letter, ...] = ()

    @classmethod
    def parse(cls, text: str) -> "MutationWord":
        letters: List[Letter] = []
        pos = 0
        while pos < len(text):
            if text[pos].isspace():
                pos += 1
                continue
            m = _LETTER.match(text, pos)
            if m is None:
                raise LiteralError("expected a generator such as r1 or r2'", text, pos)
            index = int(m.group(1))
            if index < 1:
                raise LiteralError("generator indices start at 1", text, m.start(1))
            letters.append(Letter(index, m.group(2) is not None))
            pos = m.end()
        return cls(tuple(letters))

    def check(self, length: int) -> None:
        for letter in self.letters:
            if not 1 <= letter.index <= length - 1:
                raise UsageError(
                    f"generator {letter} out of range for sequences of length {length}"
                )

    def inverse(self) -> "MutationWord":
        return MutationWord(
            tuple(Letter(l.index, not l.inverse) for l in reversed(self.letters))
        )

    def __str__(self) -> str:
        return " ".join(str(l) for l in self.letters)


def _tail_context(alg: NakayamaAlgebra, tail: Tuple[Ind, ...]) -> WideContext:
    if not tail:
        return whole_category(alg)
    return build_context(alg, psi_inv_whole(alg, tail))


def _step(alg: NakayamaAlgebra, i: int, seq: Sequence[Ind], inverse: bool) -> TauExcSeq:
    seq = tuple(seq)
    if not 1 <= i <= len(seq) - 1:
        raise UsageError(f"mutation index {i} out of range for a sequence of length {len(seq)}")
    tail = seq[i + 1 :]
    ctx = _tail_context(alg, tail)
    step = mutate_sequence_pair_inverse if inverse else mutate_sequence_pair
    pair = step(ctx, seq[i - 1], seq[i])
    return seq[: i - 1] + pair + tail


def mutate_at(alg: NakayamaAlgebra, i: int, seq: Sequence[Ind]) -> TauExcSeq:
    """phi_i(seq)."""
    return _step(alg, i, seq, inverse=False)


def mutate_at_inverse(alg: NakayamaAlgebra, i: int, seq: Sequence[Ind]) -> TauExcSeq:
    """phi_i^-1(seq)."""
    return _step(alg, i, seq, inverse=True)


def apply_word(alg: NakayamaAlgebra, word: MutationWord, seq: Sequence[Ind]) -> TauExcSeq:
    word.check(len(seq))
    out = tuple(seq)
    for letter in reversed(word.letters):
        out = _step(alg, letter.index, out, letter.inverse)
    return out


@dataclass(frozen=True)
class Orbit:
    representative: TauExcSeq
    size: int


def orbits(
    alg: NakayamaAlgebra, generators: str = "left", jobs: int = 1, max_seqs: int = 0
) -> List[Orbit]:
    """Orbits of complete sequences under phi_1, ..., phi_{n-1} (and inverses)."""
    if generators not in ("left", "both"):
        raise UsageError(f"unknown generator set {generators!r}")
    seqs = enumerate_complete(alg, jobs=jobs, max_seqs=max_seqs)
    graph = nx.Graph()
    graph.add_nodes_from(seqs)
    known = set(seqs)
    steps = [False] if generators == "left" else [False, True]
    for seq in seqs:
        for i in range(1, len(seq)):
            for inverse in steps:
                image = _step(alg, i, seq, inverse)
                if image in known:
                    graph.add_edge(seq, image)
    found = [Orbit(min(c), len(c)) for c in nx.connected_components(graph)]
    found.sort(key=lambda o: o.representative)
    logger.info("%d orbits on %d complete sequences over %s", len(found), len(seqs), alg)
    return found
