"""Utility functions for rlcongest."""

from __future__ import annotations

from .locking import acquire_lock, output_dir_lock
from .logging import get_logger, setup_logging, timed
from .rng import make_rng

__all__ = [
    "acquire_lock",
    "get_logger",
    "make_rng",
    "output_dir_lock",
    "setup_logging",
    "timed",
]
