"""
Logging and console helpers shared by the fixbound entry points.

Functions:
    setup_logging      - Configure the root logger for one CLI invocation.
    set_print_logger   - Choose the logger behind print_and_log and print_error.
    print_and_log      - Write a result to stdout and log it at INFO.
    print_error        - Write a rich-formatted error to stderr and log it at ERROR.
"""

import logging
import os
import sys
from typing import Optional

from rich import print as rich_print

_LOG_FORMAT = '%(asctime)s %(levelname)s %(process)d %(name)s %(message)s'

# Logger used by print_and_log and print_error
_print_logger: Optional[logging.Logger] = None


def _log_handler(app_name: str, logfile: Optional[str]) -> logging.Handler:
    """File handler for logfile, $FIXBOUND_LOGFILE or ~/.<app_name>/log.txt.

    Falls back to a NullHandler when the file cannot be opened; stdout is reserved
    for JSON and CSV results, so logs never go there.
    """
    logfile = logfile or os.environ.get("FIXBOUND_LOGFILE")
    try:
        if logfile is None:
            log_dir = os.path.expanduser(f"~/.{app_name}")
            os.makedirs(log_dir, exist_ok=True)
            logfile = os.path.join(log_dir, "log.txt")
        return logging.FileHandler(logfile)
    except OSError:
        return logging.NullHandler()


def setup_logging(app_name: str = "fixbound", loglevel: int = logging.INFO, logfile: Optional[str] = None) -> logging.Logger:
    """Replace the root logger's handlers with one file handler and return the root logger."""
    root = logging.getLogger()
    root.setLevel(loglevel)
    for h in root.handlers[:]:
        root.removeHandler(h)
    handler = _log_handler(app_name, logfile)
    handler.setFormatter(logging.Formatter(_LOG_FORMAT))
    root.addHandler(handler)
    set_print_logger(root)
    root.debug("logging configured for %s", app_name)
    return root


def set_print_logger(logger: logging.Logger) -> None:
    global _print_logger
    _print_logger = logger


def print_and_log(message: str, **kwargs) -> None:
    """Plain print, since the output may be parsed (JSON, CSV)."""
    print(message, **kwargs)
    if _print_logger is not None:
        _print_logger.info(message.rstrip("\n"))


def print_error(message: str, **kwargs) -> None:
    rich_print(f'[bold red]{message}[/bold red]', file=sys.stderr, **kwargs)
    if _print_logger is not None:
        _print_logger.error(message)
