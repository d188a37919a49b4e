"""
Logging Utility - Centralized logging configuration and helpers.

Every module logs through ``get_logger(__name__)``. Reports and JSON go to
stdout, so the console handler writes to stderr.
"""

import logging
import platform
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional

from src.common.constants.app_constants import AppInfo, LogSettings


class LoggerSetup:
    """
    Centralized logger configuration.

    Provides methods to setup and configure loggers with consistent formatting,
    file rotation, and console output.
    """

    _initialized = False
    _log_file_path: Optional[Path] = None

    @classmethod
    def initialize(cls, log_file: Optional[str] = None,
                   log_level: str = LogSettings.INFO,
                   console_output: bool = True) -> None:
        """
        Initialize the logging system.

        Args:
            log_file: Path to log file. If None, uses ~/.kummer_lab/logs
            log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
            console_output: Whether to also log to stderr
        """
        if cls._initialized:
            return

        level = getattr(logging, log_level.upper(), logging.INFO)

        root_logger = logging.getLogger()
        root_logger.setLevel(level)
        root_logger.handlers.clear()

        formatter = logging.Formatter(
            LogSettings.FORMAT,
            datefmt=LogSettings.DATE_FORMAT
        )

        file_error = None
        try:
            cls._log_file_path = cls._resolve_log_file(log_file)
            file_handler = RotatingFileHandler(
                cls._log_file_path,
                maxBytes=LogSettings.MAX_LOG_SIZE,
                backupCount=LogSettings.BACKUP_COUNT
            )
            file_handler.setLevel(level)
            file_handler.setFormatter(formatter)
            root_logger.addHandler(file_handler)
        except OSError as e:
            # Read-only home directories and the like: keep going on the console
            cls._log_file_path = None
            file_error = e
            console_output = True

        if console_output:
            console_handler = logging.StreamHandler(sys.stderr)
            console_handler.setLevel(level)
            console_handler.setFormatter(formatter)
            root_logger.addHandler(console_handler)

        cls._initialized = True

        logger = logging.getLogger(__name__)
        if file_error is not None:
            logger.warning(f"Log file unavailable, console only: {file_error}")
        logger.info("=" * 60)
        logger.info(f"{AppInfo.NAME} {AppInfo.VERSION} logging initialized")
        logger.info(f"Log file: {cls._log_file_path}")
        logger.info(f"Log level: {log_level}")
        cls._log_environment(logger)

    @staticmethod
    def _resolve_log_file(log_file: Optional[str]) -> Path:
        if log_file:
            path = Path(log_file)
            path.parent.mkdir(parents=True, exist_ok=True)
            return path
        log_dir = Path.home() / AppInfo.DATA_DIR_NAME / LogSettings.LOG_DIR_NAME
        log_dir.mkdir(parents=True, exist_ok=True)
        return log_dir / LogSettings.LOG_FILE

    @classmethod
    def get_logger(cls, name: str) -> logging.Logger:
        """
        Get a logger with the specified name.

        Args:
            name: Name of the logger (typically __name__)

        Returns:
            logging.Logger: Logger instance; handlers attach to the root
            logger once ``initialize`` runs
        """
        return logging.getLogger(name)

    @classmethod
    def set_level(cls, log_level: str) -> None:
        """
        Change the logging level for all handlers.

        Args:
            log_level: New logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        """
        level = getattr(logging, log_level.upper())
        root_logger = logging.getLogger()
        root_logger.setLevel(level)

        for handler in root_logger.handlers:
            handler.setLevel(level)

    @classmethod
    def enable_console(cls, log_level: Optional[str] = None) -> None:
        """Attach a stderr handler after initialization (``--verbose``)."""
        root_logger = logging.getLogger()
        for handler in root_logger.handlers:
            if isinstance(handler, logging.StreamHandler) and \
                    not isinstance(handler, logging.FileHandler):
                return
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LogSettings.FORMAT,
                                               datefmt=LogSettings.DATE_FORMAT))
        handler.setLevel(getattr(logging, (log_level or LogSettings.INFO).upper()))
        root_logger.addHandler(handler)

    @classmethod
    def _log_environment(cls, logger: logging.Logger) -> None:
        try:
            logger.info(f"Python Version: {sys.version.split()[0]}")
            logger.info(f"Platform: {platform.platform()}")
            cls._log_library_versions(logger)
        except Exception as e:
            logger.warning(f"Could not log environment diagnostics: {e}")

    @classmethod
    def _log_library_versions(cls, logger: logging.Logger) -> None:
        """
        Log versions of key libraries.

        Args:
            logger: Logger instance to use
        """
        libraries = [
            ('numpy', 'NumPy'),
            ('scipy', 'SciPy'),
            ('sympy', 'SymPy'),
            ('networkx', 'NetworkX'),
        ]

        logger.info("Key Library Versions:")
        for module_name, display_name in libraries:
            try:
                module = __import__(module_name)
                version = getattr(module, '__version__', 'unknown')
                logger.info(f"  {display_name}: {version}")
            except ImportError:
                logger.info(f"  {display_name}: not installed")


def get_logger(name: str) -> logging.Logger:
    """
    Convenience function to get a logger.

    Args:
        name: Name of the logger (typically __name__)

    Returns:
        logging.Logger: Configured logger instance
    """
    return LoggerSetup.get_logger(name)


def log_search_event(logger: logging.Logger, shape_label: str,
                     event: str, level: str = "INFO") -> None:
    """
    Log a search event with consistent formatting.

    Args:
        logger: Logger instance
        shape_label: Shape being searched (e.g., "d=4 n=2")
        event: Event description
        level: Log level
    """
    log_func = getattr(logger, level.lower())
    log_func(f"[Search {shape_label}] {event}")


def log_lemma_event(logger: logging.Logger, lemma: str,
                    event: str, level: str = "INFO") -> None:
    """
    Log a structural-check event with consistent formatting.

    Args:
        logger: Logger instance
        lemma: Check identifier (see LemmaNames)
        event: Event description
        level: Log level
    """
    log_func = getattr(logger, level.lower())
    log_func(f"[Lemma: {lemma}] {event}")
