"""Service layer interface (protocol) definitions for improved testability."""

from __future__ import annotations

from typing import List, Protocol

from .storage.models import VerificationRun


class IRunRepository(Protocol):
    def save_run(self, run: VerificationRun) -> int: ...  # noqa: D401
    def get_recent_runs(self, limit: int = 10) -> List[VerificationRun]: ...  # noqa: D401
    def get_total_run_count(self) -> int: ...  # noqa: D401
