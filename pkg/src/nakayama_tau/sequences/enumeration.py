"""
Enumeration, validation and completion of tau-exceptional sequences.
"""

from __future__ import annotations

import functools
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence, Tuple

from ..algebra.models import Ind, NakayamaAlgebra
from ..errors import UsageError
from ..reduction.context import build_context

logger = logging.getLogger(__name__)

TauExcSeq = Tuple[Ind, ...]


@functools.cache
def _sequences(alg: NakayamaAlgebra, length: int) -> Tuple[TauExcSeq, ...]:
    if length == 0:
        return ((),)
    out: List[TauExcSeq] = []
    for last in alg.indecomposables():
        out.extend(_ending_in(alg, last, length))
    return tuple(out)


def _ending_in(alg: NakayamaAlgebra, last: Ind, length: int) -> List[TauExcSeq]:
    # every indecomposable is tau-rigid, so each one may close a sequence
    inner = build_context(alg, (last,))
    return [
        tuple(inner.to_ambient[a] for a in head) + (last,)
        for head in _sequences(inner.abstract, length - 1)
    ]


@functools.cache
def _count(alg: NakayamaAlgebra, length: int) -> int:
    if length == 0:
        return 1
    return sum(
        _count(build_context(alg, (last,)).abstract, length - 1)
        for last in alg.indecomposables()
    )


def _complete_ending_in(args: Tuple[NakayamaAlgebra, Ind]) -> List[TauExcSeq]:
    alg, last = args
    return _ending_in(alg, last, alg.rank)


def check_engine_options(jobs: int, max_seqs: int) -> None:
    """Raise ``UsageError`` for a worker count below 1 or a negative cap."""
    if jobs < 1:
        raise UsageError(f"jobs must be at least 1, got {jobs}")
    if max_seqs < 0:
        raise UsageError(f"max_seqs must be non-negative (0 = no cap), got {max_seqs}")


def enumerate_sequences(alg: NakayamaAlgebra, length: int) -> List[TauExcSeq]:
    """All tau-exceptional sequences of the given length."""
    if length < 0:
        raise UsageError("sequence length must be non-negative")
    return list(_sequences(alg, length))


def count_complete(alg: NakayamaAlgebra) -> int:
    """Number of complete tau-exceptional sequences, without listing them."""
    return _count(alg, alg.rank)


def enumerate_complete(
    alg: NakayamaAlgebra, jobs: int = 1, max_seqs: int = 0
) -> List[TauExcSeq]:
    """All complete tau-exceptional sequences, grouped by last entry in canonical order.

    With ``jobs > 1`` the last entries are farmed out to worker processes; results
    are merged in canonical order so the output does not depend on scheduling.
    A positive ``max_seqs`` stops the enumeration once that many are collected.
    """
    check_engine_options(jobs, max_seqs)
    if alg.rank == 0:
        return [()]
    if not max_seqs:
        if jobs > 1:
            tasks = [(alg, last) for last in alg.indecomposables()]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                found = [s for chunk in pool.map(_complete_ending_in, tasks) for s in chunk]
        else:
            found = list(_sequences(alg, alg.rank))
        logger.info("Enumerated %d complete sequences over %s", len(found), alg)
        return found

    seqs: List[TauExcSeq] = []
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_complete_ending_in, (alg, last)) for last in alg.indecomposables()
            ]
            for future in futures:
                seqs.extend(future.result())
                if len(seqs) >= max_seqs:
                    break
            for future in futures:
                future.cancel()
    else:
        for last in alg.indecomposables():
            seqs.extend(_ending_in(alg, last, alg.rank))
            if len(seqs) >= max_seqs:
                break
    if len(seqs) >= max_seqs:
        logger.warning("Reached the cap of %d sequences over %s", max_seqs, alg)
    return seqs[:max_seqs]


def is_tau_exceptional(alg: NakayamaAlgebra, seq: Sequence[Ind]) -> bool:
    """A_t is tau-rigid and (A_1, ..., A_{t-1}) is tau-exceptional in J(A_t)."""
    seq = tuple(seq)
    if not seq:
        return True
    alg.check(*seq)
    last = seq[-1]
    inner = build_context(alg, (last,))
    if any(a not in inner.members for a in seq[:-1]):
        return False
    return is_tau_exceptional(inner.abstract, tuple(inner.to_abstract[a] for a in seq[:-1]))


def is_complete(alg: NakayamaAlgebra, seq: Sequence[Ind]) -> bool:
    return len(seq) == alg.rank and is_tau_exceptional(alg, seq)


def completions(
    alg: NakayamaAlgebra, partial: Sequence[Optional[Ind]]
) -> List[TauExcSeq]:
    """Complete sequences agreeing with ``partial`` away from its single hole."""
    partial = tuple(partial)
    if len(partial) != alg.rank:
        raise UsageError(f"a complete sequence over {alg} has {alg.rank} entries")
    holes = [i for i, a in enumerate(partial) if a is None]
    if len(holes) != 1:
        raise UsageError("exactly one entry must be left open")
    alg.check(*(a for a in partial if a is not None))
    j = holes[0]
    return [
        s
        for s in _sequences(alg, alg.rank)
        if all(a == b for i, (a, b) in enumerate(zip(s, partial)) if i != j)
    ]
