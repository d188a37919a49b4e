"""
Application Constants - General application-level constants.

This module contains constants used across the entire application.
"""


class AppInfo:
    """Application information."""

    NAME = "Kummer Lab"
    VERSION = "1.0.0"
    PROG = "kummer-lab"

    # Per-user data directory (config, logs)
    DATA_DIR_NAME = ".kummer_lab"
    CONFIG_FILE = "config.json"


class EnvVars:
    """Environment variables read by the application."""

    THREADS = "KUMMER_THREADS"
    CONFIG = "KUMMER_CONFIG"


class ExitCodes:
    """Process exit-code contract of the command line."""

    OK = 0
    VIOLATION = 1
    USAGE = 2
    INCOMPLETE = 3


class ThreadSettings:
    """Worker configuration settings."""

    MIN_WORKERS = 1
    # Parallel search is only worth the process start-up above this many branches
    PARALLEL_MIN_TASKS = 4


class LogSettings:
    """Logging configuration."""

    # Log levels
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"

    LEVELS = (DEBUG, INFO, WARNING, ERROR, CRITICAL)

    # Log format
    FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

    # File settings
    LOG_DIR_NAME = "logs"
    LOG_FILE = "kummer_lab.log"
    MAX_LOG_SIZE = 10 * 1024 * 1024  # 10 MB
    BACKUP_COUNT = 5
