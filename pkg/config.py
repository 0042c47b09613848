"""Centralized config for the CLI and workflows.

Environment variables (optional, also read from a local .env file):
- STEGO_KEY: secret key passphrase used when no --key-insecure is given
- STEGO_SEED: integer seed for reproducible position-file salts
- LOG_LEVEL: logging level for the CLI (default: WARNING)
- DEBUG: print banner dumps of workflow results

Keys are read from the environment or prompted for, never taken from a bare
argument unless --key-insecure is used.
"""

from __future__ import annotations

from typing import Optional

from pydantic_settings import BaseSettings, SettingsConfigDict


class StegoSettings(BaseSettings):
    """Runtime settings."""

    stego_key: Optional[str] = None
    stego_seed: Optional[int] = None
    log_level: str = "WARNING"
    debug: bool = False

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",  # .env may carry unrelated variables
    )


def get_settings() -> StegoSettings:
    """Load settings fresh from the environment."""
    return StegoSettings()
