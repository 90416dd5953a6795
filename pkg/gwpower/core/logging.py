"""
Centralized logging configuration using loguru
"""

import sys
from pathlib import Path
from typing import Optional

from loguru import logger

from gwpower.core.config import get_settings


def setup_logging(level: Optional[str] = None, log_file: Optional[str] = None):
    """
    Configure loguru sinks for a command run

    Args:
        level: Logging level (default: settings.LOG_LEVEL)
        log_file: Optional log file path (default: settings.LOG_FILE, empty disables)
    """
    settings = get_settings()
    level = level or settings.LOG_LEVEL
    log_file = settings.LOG_FILE if log_file is None else log_file

    # Remove default handler
    logger.remove()

    # Console handler (colored)
    logger.add(
        sys.stderr,
        format="<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | <cyan>{name}</cyan>:<cyan>{function}</cyan> - <level>{message}</level>",  # noqa: E501
        level=level,
        colorize=True,
    )

    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        logger.add(
            log_file,
            format="{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{function}:{line} - {message}",
            level="DEBUG",
            rotation="10 MB",
            retention="30 days",
            compression="zip",
        )

    logger.debug(f"Logging configured: level={level}, file={log_file or '-'}")


__all__ = ["logger", "setup_logging"]
