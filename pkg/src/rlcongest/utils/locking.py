"""Output-directory locking for rlcongest runs."""

from __future__ import annotations

import fcntl
from collections.abc import Generator
from contextlib import contextmanager
from pathlib import Path
from typing import IO

from ..config import LOCK_NAME
from ..exceptions import LockError


@contextmanager
def acquire_lock(
    lock_path: Path,
    blocking: bool = False,
) -> Generator[IO, None, None]:
    """Acquire an exclusive lock on a file.

    Args:
        lock_path: Path to the lock file
        blocking: If True, wait for the lock; if False, fail immediately

    Yields:
        The lock file handle

    Raises:
        LockError: If the lock cannot be acquired
    """
    lock_file = open(lock_path, "w")
    try:
        flags = fcntl.LOCK_EX
        if not blocking:
            flags |= fcntl.LOCK_NB

        try:
            fcntl.flock(lock_file, flags)
        except BlockingIOError:
            lock_file.close()
            raise LockError(
                f"Another run is already writing to {lock_path.parent} (lock: {lock_path})"
            ) from None

        yield lock_file

    finally:
        try:
            fcntl.flock(lock_file, fcntl.LOCK_UN)
        except (OSError, ValueError):
            pass
        lock_file.close()


@contextmanager
def output_dir_lock(output_dir: Path) -> Generator[Path, None, None]:
    """Create ``output_dir`` if needed and hold its run lock.

    Yields:
        The output directory
    """
    output_dir.mkdir(parents=True, exist_ok=True)
    with acquire_lock(output_dir / LOCK_NAME):
        yield output_dir
