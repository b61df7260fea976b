"""
JSON report models shared by every command.
"""

from typing import Any, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from ..algebra.literals import format_sequence
from ..algebra.models import NakayamaAlgebra
from ..mutation.actions import Orbit
from ..mutation.verify import BraidReport, Counterexample


class Witness(BaseModel):
    """A sequence on which the two sides of a relation differ."""

    relation: str = Field(..., description="Relation label, e.g. B2:i=1")
    sequence: str = Field(..., description="Sequence literal the words act on")
    left: str = Field(..., description="Result of the left-hand word")
    right: str = Field(..., description="Result of the right-hand word")


class OrbitEntry(BaseModel):
    representative: str
    size: int = Field(..., ge=1)


class Report(BaseModel):
    """Stable report schema; field order is the serialisation order."""

    model_config = ConfigDict()

    algebra: str = Field(..., description="Algebra literal, e.g. C4")
    command: str = Field(..., description="Command that produced the report")
    count: Optional[int] = Field(default=None, ge=0)
    ok: Optional[bool] = None
    checked_sequences: Optional[int] = Field(default=None, ge=0)
    total_sequences: Optional[int] = Field(
        default=None, ge=0, description="Complete sequences over the algebra, ignoring any cap"
    )
    max_seqs: Optional[int] = Field(default=None, ge=1, description="Cap in force, if any")
    relations: Optional[List[str]] = None
    items: Optional[List[Any]] = None
    witness: Optional[Witness] = None
    counterexamples: Optional[List[Witness]] = None
    orbits: Optional[List[OrbitEntry]] = None
    elapsed_ms: float = Field(default=0.0, ge=0)


def witness_from(alg: NakayamaAlgebra, c: Counterexample) -> Witness:
    return Witness(
        relation=c.relation,
        sequence=format_sequence(alg, c.sequence),
        left=format_sequence(alg, c.left),
        right=format_sequence(alg, c.right),
    )


def braid_report(
    report: BraidReport, elapsed_ms: float, exhaustive: bool = False
) -> Report:
    alg = report.algebra
    witnesses = [witness_from(alg, c) for c in report.counterexamples]
    return Report(
        algebra=str(alg),
        command="verify-braid",
        ok=report.ok,
        checked_sequences=report.checked_sequences,
        total_sequences=report.total_sequences,
        max_seqs=report.max_seqs or None,
        relations=list(report.relations),
        witness=witnesses[0] if witnesses else None,
        counterexamples=witnesses if exhaustive else None,
        elapsed_ms=elapsed_ms,
    )


def orbit_report(
    alg: NakayamaAlgebra, found: List[Orbit], elapsed_ms: float
) -> Report:
    return Report(
        algebra=str(alg),
        command="orbit",
        count=len(found),
        orbits=[
            OrbitEntry(representative=format_sequence(alg, o.representative), size=o.size)
            for o in found
        ],
        elapsed_ms=elapsed_ms,
    )


def emit_json(report: Report) -> str:
    """Serialise a report; absent fields are omitted."""
    return report.model_dump_json(exclude_none=True)
