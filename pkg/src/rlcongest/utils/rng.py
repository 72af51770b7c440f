"""Counter-based, splittable random streams keyed by a single word seed."""

from __future__ import annotations

import numpy as np


def make_rng(seed: int, *stream: int) -> np.random.Generator:
    """Return a Philox generator for ``seed`` and an optional stream path.

    The same ``(seed, *stream)`` always yields the same sequence; distinct
    stream paths give independent sequences, so per-item generators can be
    derived without sharing state across threads.
    """
    entropy = [int(seed) & 0xFFFFFFFFFFFFFFFF, *(int(s) for s in stream)]
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(entropy)))
