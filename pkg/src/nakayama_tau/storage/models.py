"""
Data models for the verification run ledger.
"""

from datetime import datetime
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator


class VerificationRun(BaseModel):
    """One recorded ``verify-braid`` run."""

    model_config = ConfigDict()

    id: Optional[int] = None
    algebra: str = Field(..., description="Algebra literal, e.g. C4")
    relations: List[str] = Field(default_factory=list, description="Relation labels checked")
    ok: bool = Field(..., description="True when no counterexample was found")
    checked_sequences: int = Field(..., ge=0, description="Sequences examined")
    counterexamples: int = Field(default=0, ge=0, description="Counterexamples found")
    jobs: int = Field(default=1, ge=1, description="Worker processes used")
    max_seqs: int = Field(default=0, ge=0, description="Sequence cap (0 = none)")
    elapsed_ms: float = Field(..., ge=0, description="Wall-clock time of the run")
    created_at: datetime = Field(..., description="When the run finished")

    @field_validator("created_at", mode="before")
    @classmethod
    def parse_datetime(cls, v):
        if isinstance(v, str):
            return datetime.fromisoformat(v.replace("Z", "+00:00"))
        return v
