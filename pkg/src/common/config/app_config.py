"""
Application Configuration - Centralized configuration management.

Settings live in dataclasses, persist as JSON under the user's data
directory and can be overridden from the environment.
"""

import json
import os
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Optional

from src.common.constants.app_constants import AppInfo, EnvVars, LogSettings
from src.common.constants.search_constants import CapacityLimits, SearchDefaults
from src.common.exceptions.exceptions import ConfigurationLoadError, ConfigurationSaveError
from src.common.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass
class SearchSettings:
    """Defaults for max_kummer_dimension runs."""
    use_symmetry: bool = SearchDefaults.USE_SYMMETRY
    symmetry_depth: int = SearchDefaults.SYMMETRY_DEPTH
    deterministic: bool = SearchDefaults.DETERMINISTIC
    time_budget: Optional[float] = SearchDefaults.TIME_BUDGET
    max_workers: Optional[int] = None
    orbit_state_cap: int = CapacityLimits.ORBIT_STATE_CAP
    progress_interval: int = SearchDefaults.PROGRESS_INTERVAL


@dataclass
class LoggingSettings:
    """Configuration for the logging system."""
    log_level: str = LogSettings.INFO
    log_file: Optional[str] = None
    console_output: bool = False


@dataclass
class AppConfig:
    """Main application configuration."""
    search: SearchSettings = None
    logging: LoggingSettings = None

    def __post_init__(self):
        """Initialize sub-configurations if not provided."""
        if self.search is None:
            self.search = SearchSettings()
        if self.logging is None:
            self.logging = LoggingSettings()


def _known_fields(cls, data: dict) -> dict:
    names = {f.name for f in fields(cls)}
    unknown = set(data) - names
    if unknown:
        logger.warning(f"Ignoring unknown {cls.__name__} keys: {sorted(unknown)}")
    return {k: v for k, v in data.items() if k in names}


def threads_from_environment() -> Optional[int]:
    """
    Read the worker cap from ``KUMMER_THREADS``.

    Returns:
        The positive integer cap, or None when unset or invalid
    """
    raw = os.environ.get(EnvVars.THREADS)
    if raw is None or raw.strip() == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        logger.warning(f"{EnvVars.THREADS}={raw!r} is not an integer; ignored")
        return None
    if value < 1:
        logger.warning(f"{EnvVars.THREADS}={value} must be positive; ignored")
        return None
    return value


class ConfigManager:
    """
    Manages application configuration with support for:
    - Loading from JSON files
    - Environment overrides
    - Runtime updates
    - Saving configurations
    """

    def __init__(self, config_path: Optional[str] = None):
        """
        Initialize configuration manager.

        Args:
            config_path: Path to configuration file. If None, uses
                ``KUMMER_CONFIG`` or ~/.kummer_lab/config.json
        """
        self._config = AppConfig()
        self._config_path = Path(config_path or self._get_default_config_path())

        if self._config_path.exists():
            try:
                self.load()
            except ConfigurationLoadError as e:
                logger.error(f"{e}; continuing with defaults")
        self._apply_environment()

    @staticmethod
    def _get_default_config_path() -> str:
        """Get the default configuration file path."""
        from_env = os.environ.get(EnvVars.CONFIG)
        if from_env:
            return from_env
        return str(Path.home() / AppInfo.DATA_DIR_NAME / AppInfo.CONFIG_FILE)

    @property
    def config_path(self) -> Path:
        return self._config_path

    def load(self) -> None:
        """
        Load configuration from file.

        Raises:
            ConfigurationLoadError: If the file is unreadable or not a JSON object
        """
        try:
            with open(self._config_path, 'r', encoding='utf-8') as f:
                data = json.load(f)
            if not isinstance(data, dict):
                raise ValueError("top level must be an object")

            if 'search' in data:
                self._config.search = SearchSettings(
                    **_known_fields(SearchSettings, data['search']))
            if 'logging' in data:
                self._config.logging = LoggingSettings(
                    **_known_fields(LoggingSettings, data['logging']))

            logger.info(f"Loaded configuration from {self._config_path}")
        except (OSError, ValueError, TypeError) as e:
            raise ConfigurationLoadError(
                f"Error loading configuration {self._config_path}: {e}") from e

    def _apply_environment(self) -> None:
        threads = threads_from_environment()
        if threads is not None:
            self._config.search.max_workers = threads
            logger.debug(f"Worker cap from environment: {threads}")

    def save(self) -> None:
        """
        Save current configuration to file.

        Raises:
            ConfigurationSaveError: If the file cannot be written
        """
        try:
            self._config_path.parent.mkdir(parents=True, exist_ok=True)
            with open(self._config_path, 'w', encoding='utf-8') as f:
                json.dump(asdict(self._config), f, indent=2, sort_keys=True)
        except OSError as e:
            logger.error(f"Error saving configuration: {e}")
            raise ConfigurationSaveError(str(e)) from e

    def get(self) -> AppConfig:
        """Get the current configuration."""
        return self._config

    def update_search(self, **kwargs) -> None:
        """
        Update search settings.

        Args:
            **kwargs: SearchSettings field values
        """
        for key, value in kwargs.items():
            if hasattr(self._config.search, key):
                setattr(self._config.search, key, value)
            else:
                logger.warning(f"Unknown search setting: {key}")


# Global configuration instance
_config_manager = None


def get_config_manager(config_path: Optional[str] = None) -> ConfigManager:
    """
    Get the global configuration manager instance.

    Args:
        config_path: Used only when the manager is created

    Returns:
        ConfigManager: The global configuration manager
    """
    global _config_manager
    if _config_manager is None:
        _config_manager = ConfigManager(config_path)
    return _config_manager
