"""
Run ledger for verification results.
"""

from .models import VerificationRun
from .operations import RunStore

__all__ = ["VerificationRun", "RunStore"]
