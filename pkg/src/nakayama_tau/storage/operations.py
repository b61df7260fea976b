"""SQLite ledger of verification runs."""

from __future__ import annotations

import json
import logging
import os
import sqlite3
from typing import List

from .models import VerificationRun

logger = logging.getLogger(__name__)


class RunStore:
    """SQLite store for ``verify-braid`` runs."""

    def __init__(self, db_path: str) -> None:
        self.db_path = db_path
        self._ensure_dir()
        self._init_schema()

    # Internal helpers --------------------------------------------------
    def _ensure_dir(self) -> None:
        d = os.path.dirname(self.db_path)
        if d and not os.path.exists(d):
            os.makedirs(d)

    def _connect(self) -> sqlite3.Connection:
        conn = sqlite3.connect(self.db_path, timeout=30, isolation_level=None)
        cur = conn.cursor()
        try:
            cur.execute("PRAGMA journal_mode=WAL;")
            cur.execute("PRAGMA synchronous=NORMAL;")
            cur.execute("PRAGMA busy_timeout=5000;")
        except sqlite3.Error:
            pass
        return conn

    def _init_schema(self) -> None:
        with self._connect() as conn:
            cur = conn.cursor()
            cur.execute(
                """
                CREATE TABLE IF NOT EXISTS runs (
                    id INTEGER PRIMARY KEY AUTOINCREMENT,
                    algebra TEXT NOT NULL,
                    relations TEXT NOT NULL,
                    ok INTEGER NOT NULL,
                    checked_sequences INTEGER NOT NULL,
                    counterexamples INTEGER NOT NULL DEFAULT 0,
                    jobs INTEGER NOT NULL DEFAULT 1,
                    max_seqs INTEGER NOT NULL DEFAULT 0,
                    elapsed_ms REAL NOT NULL,
                    created_at TEXT NOT NULL
                )
                """
            )
            cur.execute(
                "CREATE INDEX IF NOT EXISTS idx_runs_algebra_created ON runs(algebra, created_at)"
            )
            conn.commit()

    # Run operations ----------------------------------------------------
    def save_run(self, run: VerificationRun) -> int:
        with self._connect() as conn:
            cur = conn.cursor()
            cur.execute(
                """
                INSERT INTO runs
                (algebra, relations, ok, checked_sequences, counterexamples,
                 jobs, max_seqs, elapsed_ms, created_at)
                VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?)
                """,
                (
                    run.algebra,
                    json.dumps(run.relations),
                    int(run.ok),
                    run.checked_sequences,
                    run.counterexamples,
                    run.jobs,
                    run.max_seqs,
                    run.elapsed_ms,
                    run.created_at.isoformat(),
                ),
            )
            logger.debug("Recorded run %s for %s", cur.lastrowid, run.algebra)
            return cur.lastrowid

    def get_recent_runs(self, limit: int = 10) -> List[VerificationRun]:
        with self._connect() as conn:
            cur = conn.cursor()
            cur.execute(
                """
                SELECT id, algebra, relations, ok, checked_sequences, counterexamples,
                       jobs, max_seqs, elapsed_ms, created_at
                FROM runs
                ORDER BY created_at DESC, id DESC
                LIMIT ?
                """,
                (limit,),
            )
            rows = cur.fetchall()
            return [
                VerificationRun(
                    id=r[0],
                    algebra=r[1],
                    relations=json.loads(r[2]),
                    ok=bool(r[3]),
                    checked_sequences=r[4],
                    counterexamples=r[5],
                    jobs=r[6],
                    max_seqs=r[7],
                    elapsed_ms=r[8],
                    created_at=r[9],
                )
                for r in rows
            ]

    def get_total_run_count(self) -> int:
        with self._connect() as conn:
            cur = conn.cursor()
            cur.execute("SELECT COUNT(*) FROM runs")
            return cur.fetchone()[0]
