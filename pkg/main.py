# main.py

import sys
from typing import List, Optional

from src.common.config.app_config import ConfigManager, get_config_manager
from src.common.constants.app_constants import AppInfo, ExitCodes
from src.common.exceptions.exceptions import KummerLabException
from src.common.utils.logger import LoggerSetup, get_logger
from src.presentation.cli.commands import build_parser


def bootstrap_logging(args, config) -> None:
    """
    Configure logging from the configuration file and the global flags.

    --log-level overrides the configured level; --verbose adds stderr output.
    """
    level = args.log_level or config.logging.log_level
    LoggerSetup.initialize(
        log_file=config.logging.log_file,
        log_level=level,
        console_output=args.verbose or config.logging.console_output,
    )
    if args.log_level:
        LoggerSetup.set_level(args.log_level)
    if args.verbose:
        LoggerSetup.enable_console(level)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Command-line entry point.

    Returns:
        int: 0 success, 1 violation found, 2 usage or input error,
        3 incomplete search
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else ExitCodes.USAGE

    manager = ConfigManager(args.config) if args.config else get_config_manager()
    config = manager.get()
    bootstrap_logging(args, config)

    logger = get_logger(__name__)
    logger.info(f"{AppInfo.NAME} {AppInfo.VERSION}: {args.command}")
    try:
        code = args.handler(args, config)
    except KummerLabException as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return ExitCodes.USAGE
    except KeyboardInterrupt:
        logger.warning("interrupted")
        return ExitCodes.INCOMPLETE
    logger.info(f"{args.command} finished with exit code {code}")
    return code


if __name__ == "__main__":
    sys.exit(main())
