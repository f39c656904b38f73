"""
Environment settings for lochmf.

Values come from environment variables (or a .env file) and never from the
JSON profiles.
"""

import os
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Settings loaded from environment variables.

    LOCHMF_THREADS caps the worker pool, LOCHMF_PROFILE selects the profile
    directory, LOCHMF_LOG_FILE enables the run file log.
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    threads: Optional[int] = Field(default=None, alias="LOCHMF_THREADS", ge=1)
    profile: str = Field(default="default", alias="LOCHMF_PROFILE")
    profiles_dir: str = Field(default="profiles", alias="LOCHMF_PROFILES_DIR")
    log_file: Optional[str] = Field(default=None, alias="LOCHMF_LOG_FILE")
    log_level: str = Field(default="WARNING", alias="LOCHMF_LOG_LEVEL")


# Global settings instance
_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """
    Get settings singleton instance.

    Loads from the environment and .env file on first call.
    """
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def reload_settings() -> Settings:
    """
    Reload settings from environment.

    Useful for testing or after .env file changes.
    """
    global _settings
    _settings = Settings()
    return _settings


def get_active_profile() -> str:
    """Get name of active profile from environment"""
    return get_settings().profile


def set_active_profile(profile_name: str) -> None:
    """
    Set active profile in environment.

    Note: This only sets in current process, not in .env file.
    """
    os.environ["LOCHMF_PROFILE"] = profile_name
    reload_settings()
