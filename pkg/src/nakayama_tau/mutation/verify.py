"""
Exhaustive checks of the braid relations on complete tau-exceptional sequences.

    B1  r_i r_j = r_j r_i            for |i - j| >= 2
    B2  r_i r_{i+1} r_i = r_{i+1} r_i r_{i+1}

By default the first counterexample (in enumeration order, then relation order)
stops the run; ``exhaustive=True`` collects them all.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from ..algebra.models import NakayamaAlgebra
from ..errors import UsageError
from ..sequences.enumeration import (
    TauExcSeq,
    check_engine_options,
    count_complete,
    enumerate_complete,
)
from .actions import MutationWord, apply_word

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Relation:
    label: str
    left: MutationWord
    right: MutationWord


@dataclass(frozen=True)
class Counterexample:
    relation: str
    sequence: TauExcSeq
    left: TauExcSeq
    right: TauExcSeq


@dataclass(frozen=True)
class BraidReport:
    algebra: NakayamaAlgebra
    relations: Tuple[str, ...]
    checked_sequences: int
    total_sequences: int
    counterexamples: Tuple[Counterexample, ...]
    max_seqs: int = 0

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def braid_relations(rank: int, which: str = "both") -> List[Relation]:
    """Relations among r_1, ..., r_{rank-1}, labelled ``B2:i=1`` / ``B1:i=1,j=3``."""
    if which not in ("b1", "b2", "both"):
        raise UsageError(f"unknown relation family {which!r}")
    out: List[Relation] = []
    if which in ("b1", "both"):
        for i in range(1, rank):
            for j in range(i + 2, rank):
                out.append(
                    Relation(
                        f"B1:i={i},j={j}",
                        MutationWord.parse(f"r{i} r{j}"),
                        MutationWord.parse(f"r{j} r{i}"),
                    )
                )
    if which in ("b2", "both"):
        for i in range(1, rank - 1):
            out.append(
                Relation(
                    f"B2:i={i}",
                    MutationWord.parse(f"r{i} r{i + 1} r{i}"),
                    MutationWord.parse(f"r{i + 1} r{i} r{i + 1}"),
                )
            )
    return out


def _check_chunk(
    args: Tuple[NakayamaAlgebra, Tuple[Relation, ...], int, Tuple[TauExcSeq, ...], bool]
) -> List[Tuple[int, Counterexample]]:
    alg, relations, offset, seqs, exhaustive = args
    found: List[Tuple[int, Counterexample]] = []
    for n, seq in enumerate(seqs):
        for rel in relations:
            left = apply_word(alg, rel.left, seq)
            right = apply_word(alg, rel.right, seq)
            if left != right:
                found.append((offset + n, Counterexample(rel.label, seq, left, right)))
                if not exhaustive:
                    return found
    return found


def _chunks(seqs: Sequence[TauExcSeq], parts: int) -> Iterable[Tuple[int, Tuple[TauExcSeq, ...]]]:
    size = max(1, -(-len(seqs) // parts))
    for start in range(0, len(seqs), size):
        yield start, tuple(seqs[start : start + size])


def verify_braid(
    alg: NakayamaAlgebra,
    which: str = "both",
    exhaustive: bool = False,
    jobs: int = 1,
    max_seqs: int = 0,
) -> BraidReport:
    check_engine_options(jobs, max_seqs)
    relations = tuple(braid_relations(alg.rank, which))
    seqs = enumerate_complete(alg, jobs=jobs, max_seqs=max_seqs)
    if jobs > 1 and len(seqs) > 1:
        tasks = [
            (alg, relations, start, chunk, exhaustive)
            for start, chunk in _chunks(seqs, jobs * 4)
        ]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            found = [hit for part in pool.map(_check_chunk, tasks) for hit in part]
    else:
        found = _check_chunk((alg, relations, 0, tuple(seqs), exhaustive))
    found.sort(key=lambda hit: hit[0])
    if found and not exhaustive:
        first_index = found[0][0]
        found = [hit for hit in found if hit[0] == first_index][:1]
        checked = first_index + 1
    else:
        checked = len(seqs)
    report = BraidReport(
        algebra=alg,
        relations=tuple(r.label for r in relations),
        checked_sequences=checked,
        total_sequences=count_complete(alg),
        counterexamples=tuple(c for _, c in found),
        max_seqs=max_seqs,
    )
    if report.ok:
        logger.info(
            "%s: %d relations hold on %d sequences", alg, len(relations), checked
        )
    else:
        logger.warning(
            "%s: %d counterexamples, first %s",
            alg,
            len(report.counterexamples),
            report.counterexamples[0].relation,
        )
    return report


def verify_b1(alg: NakayamaAlgebra, **kwargs) -> BraidReport:
    return verify_braid(alg, "b1", **kwargs)


def verify_b2(alg: NakayamaAlgebra, **kwargs) -> BraidReport:
    return verify_braid(alg, "b2", **kwargs)
