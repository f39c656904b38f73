"""
Configuration package for lochmf.

JSON profile configuration with:
- Pydantic models for validation
- Environment variable substitution
- Environment settings (LOCHMF_THREADS, LOCHMF_PROFILE) from .env

Usage:
    from config import load_config

    # Load active profile (from LOCHMF_PROFILE env var)
    config = load_config()
    params = config.eval
    checks = config.verify.get_enabled_checks()
"""

from config.loader import (
    load_config,
    reload_config,
    get_config,
    ProfileLoader,
    ConfigurationError,
)

from config.settings import (
    Settings,
    get_settings,
    reload_settings,
    get_active_profile,
    set_active_profile,
)

from config.models import (
    EvalParams,
    FiniteDifferenceSettings,
    CheckName,
    CheckSpec,
    VerifyConfig,
    ProfileConfiguration,
    CommandName,
    EvalObject,
    OutputFormat,
    GridSpec,
    RunConfig,
)

__all__ = [
    "load_config",
    "reload_config",
    "get_config",
    "ProfileLoader",
    "ConfigurationError",
    "Settings",
    "get_settings",
    "reload_settings",
    "get_active_profile",
    "set_active_profile",
    "EvalParams",
    "FiniteDifferenceSettings",
    "CheckName",
    "CheckSpec",
    "VerifyConfig",
    "ProfileConfiguration",
    "CommandName",
    "EvalObject",
    "OutputFormat",
    "GridSpec",
    "RunConfig",
]
