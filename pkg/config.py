"""
Application configuration.

All configuration is loaded from environment variables with sensible defaults.
If a .env file exists in the project root, it is loaded automatically (python-dotenv).
"""

from __future__ import annotations

import os
from pathlib import Path

from dataclasses import dataclass

# Load .env from project root when this module is first imported
_env_path = Path(__file__).resolve().parent / ".env"
if _env_path.exists():
    try:
        from dotenv import load_dotenv
        load_dotenv(_env_path)
    except ImportError:
        pass  # python-dotenv optional; env vars can be set by shell instead


@dataclass
class AppConfig:
    """Application configuration loaded from environment."""

    # Search caps
    rewrite_cap: int = 10_000_000
    search_cap: int = 100_000_000
    cycle_cap: int = 1_000_000

    # Relation generation
    fallback_relation_length: int = 8
    conjugator_depth: int = 6

    # Counterexample families
    k_max: int = 4

    log_level: str = "INFO"

    @classmethod
    def from_env(cls) -> AppConfig:
        """Load configuration from environment variables."""
        return cls(
            rewrite_cap=int(os.environ.get("BRAID_REWRITE_CAP", "10000000")),
            search_cap=int(os.environ.get("BRAID_SEARCH_CAP", "100000000")),
            cycle_cap=int(os.environ.get("BRAID_CYCLE_CAP", "1000000")),
            fallback_relation_length=int(os.environ.get("BRAID_FALLBACK_LENGTH", "8")),
            conjugator_depth=int(os.environ.get("BRAID_CONJUGATOR_DEPTH", "6")),
            k_max=int(os.environ.get("BRAID_K_MAX", "4")),
            log_level=os.environ.get("LOG_LEVEL", "INFO").upper(),
        )


# Global config singleton
config = AppConfig.from_env()
