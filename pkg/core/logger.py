"""
Logging module
One shared rich console on stderr plus RichHandler-backed loggers
"""

import logging
from pathlib import Path
from typing import Optional

from rich.console import Console
from rich.logging import RichHandler

from .config import LOG_LEVEL, DEBUG_MODE, LOG_OUTPUT_DIR

# stdout is reserved for --json documents
console = Console(stderr=True)

_ROOT_NAME = "equator"
_configured = False


def _resolve_level() -> int:
    if DEBUG_MODE:
        return logging.DEBUG
    return getattr(logging, LOG_LEVEL.upper(), logging.INFO)


def setup_logging(level: Optional[int] = None, log_file: Optional[Path] = None) -> logging.Logger:
    """
    Configure the package logger once.

    Args:
        level: overrides LOG_LEVEL / DEBUG_MODE when given
        log_file: also write plain-text records to this file (its directory
            defaults to LOG_OUTPUT_DIR when only a name is given)

    Returns:
        the package root logger
    """
    global _configured
    root = logging.getLogger(_ROOT_NAME)

    if not _configured:
        handler = RichHandler(
            console=console,
            show_path=DEBUG_MODE,
            rich_tracebacks=True,
            markup=False,
        )
        handler.setFormatter(logging.Formatter("%(message)s", datefmt="[%X]"))
        root.addHandler(handler)
        root.propagate = False
        _configured = True

    root.setLevel(level if level is not None else _resolve_level())

    if log_file is not None:
        path = Path(log_file)
        if path.parent == Path("."):
            path = LOG_OUTPUT_DIR / path
        path.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(path, encoding="utf-8")
        file_handler.setFormatter(
            logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s")
        )
        root.addHandler(file_handler)

    return root


def get_logger(name: str) -> logging.Logger:
    """Child logger under the package root, e.g. get_logger(__name__)."""
    if not _configured:
        setup_logging()
    short = name.split(".")[-1] if name.startswith("core.") else name
    return logging.getLogger(f"{_ROOT_NAME}.{short}")


__all__ = ["console", "setup_logging", "get_logger"]
