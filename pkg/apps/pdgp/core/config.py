"""Runtime configuration loaded from environment variables via Pydantic Settings."""

from __future__ import annotations

import os
from functools import lru_cache

from pydantic_settings import BaseSettings, SettingsConfigDict

# Vertex and chord subsets are single 64-bit words.
HARD_VERTEX_CAP: int = 63


class Settings(BaseSettings):
    """Central configuration for the pdgp toolkit.

    Values come from a `.env` file or OS environment variables; the CLI can
    override the caps and the worker count for a single run.
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",
    )

    # --- Parallelism ---
    PDGP_THREADS: int = 0
    PDGP_PARALLEL_MIN_VERTICES: int = 16
    PDGP_CHUNK_BITS: int = 14

    # --- Size caps ---
    PDGP_ENUM_CAP: int = 24
    PDGP_KPART_CAP: int = 16
    PDGP_PROJECTION_CAP: int = 10
    PDGP_PARTITION_CAP: int = 12
    PDGP_GRAPH_ENUM_CAP: int = 8
    PDGP_DIAGRAM_ENUM_CAP: int = 7

    # --- Logging ---
    PDGP_LOG_LEVEL: str = "WARNING"

    def resolved_threads(self) -> int:
        """Effective worker count; ``0`` means one per available CPU."""
        if self.PDGP_THREADS > 0:
            return self.PDGP_THREADS
        return max(1, os.cpu_count() or 1)

    def check_caps(self) -> None:
        """Validate caps against the hard word-size limit."""
        bad = [k for k in _CAP_FIELDS if not 0 <= getattr(self, k) <= HARD_VERTEX_CAP]
        if not 1 <= self.PDGP_CHUNK_BITS <= 30:
            bad.append("PDGP_CHUNK_BITS")
        if self.PDGP_THREADS < 0:
            bad.append("PDGP_THREADS")
        if bad:
            raise ValueError(f"Invalid configuration values: {', '.join(bad)}")


_CAP_FIELDS: tuple[str, ...] = (
    "PDGP_ENUM_CAP",
    "PDGP_KPART_CAP",
    "PDGP_PROJECTION_CAP",
    "PDGP_PARTITION_CAP",
    "PDGP_GRAPH_ENUM_CAP",
    "PDGP_DIAGRAM_ENUM_CAP",
)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Return a cached singleton of the toolkit settings."""
    return Settings()


def apply_overrides(*, cap: int | None = None, threads: int | None = None) -> Settings:
    """Push CLI overrides into the environment and reload the settings.

    Worker processes read the same environment, so they see the overrides too.
    """
    if cap is not None:
        for name in _CAP_FIELDS:
            os.environ[name] = str(cap)
    if threads is not None:
        os.environ["PDGP_THREADS"] = str(threads)
    get_settings.cache_clear()
    settings = get_settings()
    settings.check_caps()
    return settings
