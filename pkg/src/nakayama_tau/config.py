"""
Configuration management for nakayama-tau.
"""

import os
from pydantic import BaseModel, Field
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


class EngineConfig(BaseModel):
    """Configuration for enumeration and verification runs."""

    jobs: int = Field(
        default=1, ge=1, description="Worker processes used by enumeration and verifiers"
    )
    max_seqs: int = Field(
        default=0,
        ge=0,
        description="Safety cap on the number of complete sequences processed (0 = no cap)",
    )


class DatabaseConfig(BaseModel):
    """Configuration for the SQLite run ledger."""

    path: str = Field(
        default="./data/nakayama_runs.db", description="Path to SQLite database file"
    )
    record_runs: bool = Field(
        default=False, description="Record verify-braid runs in the ledger by default"
    )


class Config:
    """Main configuration class that loads all settings."""

    def __init__(self):
        self.engine = EngineConfig(
            jobs=int(os.getenv("NAKAYAMA_JOBS", "1")),
            max_seqs=int(os.getenv("NAKAYAMA_MAX_SEQS", "0")),
        )

        self.database = DatabaseConfig(
            path=os.getenv("NAKAYAMA_DB_PATH", "./data/nakayama_runs.db"),
            record_runs=self._get_bool_env("NAKAYAMA_RECORD_RUNS", False),
        )

    def _get_bool_env(self, var_name: str, default: bool) -> bool:
        """Read a boolean environment variable (1/true/yes/on)."""
        value = os.getenv(var_name)
        if value is None:
            return default
        return value.strip().lower() in {"1", "true", "yes", "on"}


class LazyConfig:
    """Builds ``Config`` on first attribute access."""

    def __init__(self):
        self._config = None

    def __getattr__(self, name):
        if self._config is None:
            self._config = Config()
        return getattr(self._config, name)


config = LazyConfig()
