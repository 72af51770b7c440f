"""Logging setup for rlcongest."""

from __future__ import annotations

import logging
import sys
import time
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path

LOGGER_NAME = "rlcongest"
LOG_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def setup_logging(
    level: int = logging.INFO,
    log_file: Path | None = None,
    quiet: bool = False,
) -> logging.Logger:
    """Configure the package logger.

    Args:
        level: Logging level (default: INFO)
        log_file: Optional path that also receives every record
        quiet: If True, install no console handler

    Returns:
        The configured ``rlcongest`` logger
    """
    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel(level)
    logger.handlers.clear()

    formatter = logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT)

    if not quiet:
        console = logging.StreamHandler(sys.stdout)
        console.setFormatter(formatter)
        logger.addHandler(console)

    if log_file:
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    return logger


def get_logger() -> logging.Logger:
    """Get the rlcongest logger instance."""
    return logging.getLogger(LOGGER_NAME)


@contextmanager
def timed(label: str, level: int = logging.INFO) -> Iterator[None]:
    """Log the wall-clock duration of the enclosed block under ``label``."""
    logger = get_logger()
    start = time.perf_counter()
    try:
        yield
    finally:
        logger.log(level, f"{label} finished in {time.perf_counter() - start:.2f}s")
