"""
Report models, JSON emission and DOT rendering.
"""

from .dot import ar_edges, emit_ar_dot
from .models import (
    OrbitEntry,
    Report,
    Witness,
    braid_report,
    emit_json,
    orbit_report,
    witness_from,
)

__all__ = [
    "ar_edges",
    "emit_ar_dot",
    "OrbitEntry",
    "Report",
    "Witness",
    "braid_report",
    "emit_json",
    "orbit_report",
    "witness_from",
]
