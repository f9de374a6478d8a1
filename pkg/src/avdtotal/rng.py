"""Deterministic random streams for the randomized phases.

Each phase draws from its own labelled substream of one master seed, so
rerunning a command with the same seed reproduces every draw regardless of
which phases run or in what order.
"""

from __future__ import annotations

import hashlib

import numpy as np


def substream(seed: int, label: str) -> np.random.Generator:
    """Independent generator for (seed, label).

    The label is hashed into the spawn key, so distinct labels give
    statistically independent streams off the same master seed.
    """
    if not 0 <= seed < 2 ** 64:
        raise ValueError("seed must fit in an unsigned 64-bit integer")
    digest = hashlib.sha256(label.encode("utf-8")).digest()
    key = int.from_bytes(digest[:16], "big")
    ss = np.random.SeedSequence(entropy=seed, spawn_key=(key,))
    return np.random.Generator(np.random.Philox(ss))
