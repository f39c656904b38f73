"""
Configuration loader for JSON-based run profiles.

Loads and validates configuration from profiles/{name}/ directory.
Supports environment variable substitution using ${VAR} syntax.
"""

import json
import os
import re
from pathlib import Path
from typing import Optional, Type, TypeVar

from pydantic import BaseModel, ValidationError

from config.models import EvalParams, ProfileConfiguration, VerifyConfig
from config.settings import get_settings
from core.errors import LochmfError

T = TypeVar('T', bound=BaseModel)

PROJECT_ROOT = Path(__file__).resolve().parent.parent


class ConfigurationError(LochmfError):
    """Raised when configuration loading or validation fails"""
    pass


def resolve_profiles_dir(profiles_base_dir: Optional[str] = None) -> Path:
    """Resolve the profiles directory; relative paths are taken from the repository root."""
    base = Path(profiles_base_dir or get_settings().profiles_dir)
    return base if base.is_absolute() else PROJECT_ROOT / base


_PLACEHOLDER = re.compile(r"\$\{(?P<name>[A-Z_][A-Z0-9_]*?)(?::-(?P<default>[^}]*))?\}")


def expand_placeholders(content: str) -> str:
    """
    Replace ${VAR} and ${VAR:-default} with values from the environment.

    Raises:
        ConfigurationError: If a ${VAR} without default is not set
    """
    def value_of(match: re.Match) -> str:
        name, default = match.group("name"), match.group("default")
        value = os.environ.get(name, default)
        if value is None:
            raise ConfigurationError(
                f"Required environment variable not set: {name} "
                f"(set it in .env or write ${{{name}:-default}})"
            )
        return value

    return _PLACEHOLDER.sub(value_of, content)


class ProfileLoader:
    """
    Loads and validates a run profile from JSON files.

    Each profile has a directory in profiles/ with these files:
    - eval.json: EvalParams for every evaluator
    - verify.json: VerifyConfig for the harness
    """

    def __init__(self, profile_name: str, profiles_base_dir: Optional[str] = None):
        """
        Initialize loader for a specific profile.

        Args:
            profile_name: Name of the profile to load
            profiles_base_dir: Base directory for all profiles (default: settings.profiles_dir)

        Raises:
            ConfigurationError: If profile directory doesn't exist
        """
        self.profile_name = profile_name
        self.profiles_base_dir = resolve_profiles_dir(profiles_base_dir)
        self.profile_dir = self.profiles_base_dir / profile_name

        if not self.profile_dir.exists():
            raise ConfigurationError(
                f"Profile directory not found: {self.profile_dir}\n"
                f"Available profiles: {self.list_profiles(str(self.profiles_base_dir))}"
            )

    def load(self) -> ProfileConfiguration:
        """
        Load complete profile configuration.

        Returns:
            ProfileConfiguration with all loaded and validated config

        Raises:
            ConfigurationError: If any config file is missing or invalid
        """
        try:
            eval_params = self._load_json("eval.json", EvalParams)
            verify = self._load_json("verify.json", VerifyConfig)
            # verify.json may omit its own eval block; it then inherits eval.json
            if "eval" not in verify.model_fields_set:
                verify = verify.model_copy(update={"eval": eval_params})
            return ProfileConfiguration(name=self.profile_name, eval=eval_params, verify=verify)
        except ValidationError as e:
            raise ConfigurationError(f"Validation error in profile '{self.profile_name}': {e}")
        except FileNotFoundError as e:
            raise ConfigurationError(f"Missing configuration file in '{self.profile_name}': {e}")
        except json.JSONDecodeError as e:
            raise ConfigurationError(f"Invalid JSON in profile '{self.profile_name}': {e}")

    def _load_json(self, filename: str, model_class: Type[T]) -> T:
        """Read one profile file, expand placeholders and validate it as model_class."""
        file_path = self.profile_dir / filename
        if not file_path.is_file():
            raise FileNotFoundError(f"Configuration file not found: {file_path}")

        raw = file_path.read_text(encoding="utf-8")
        return model_class.model_validate(json.loads(expand_placeholders(raw)))

    @classmethod
    def list_profiles(cls, profiles_base_dir: Optional[str] = None) -> list[str]:
        """
        List all available profiles.

        Returns:
            Sorted list of profile names
        """
        base_path = resolve_profiles_dir(profiles_base_dir)
        if not base_path.exists():
            return []

        return sorted(
            d.name for d in base_path.iterdir()
            if d.is_dir() and not d.name.startswith('.')
        )


# Global configuration instance
_config: Optional[ProfileConfiguration] = None


def load_config(profile_name: Optional[str] = None, force_reload: bool = False) -> ProfileConfiguration:
    """
    Load profile configuration (singleton pattern).

    Args:
        profile_name: Profile to load (None = use LOCHMF_PROFILE from env)
        force_reload: Force reload even if already loaded

    Raises:
        ConfigurationError: If loading or validation fails
    """
    global _config

    if _config is not None and not force_reload and profile_name in (None, _config.name):
        return _config

    if profile_name is None:
        profile_name = get_settings().profile

    _config = ProfileLoader(profile_name).load()
    return _config


def reload_config(profile_name: Optional[str] = None) -> ProfileConfiguration:
    """Force reload configuration."""
    return load_config(profile_name=profile_name, force_reload=True)


def get_config() -> ProfileConfiguration:
    """
    Get current configuration (must be loaded first).

    Raises:
        RuntimeError: If configuration not loaded yet
    """
    if _config is None:
        raise RuntimeError(
            "Configuration not loaded. Call load_config() first."
        )
    return _config
