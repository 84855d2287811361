"""Deterministic seed derivation shared by the engine, agents, and tournaments."""
from __future__ import annotations

import numpy as np


def derive_seed(*parts: int) -> int:
    """Mix an ordered tuple of non-negative ints into one seed.

    The same parts always map to the same seed, and distinct tuples are
    spread apart by the SeedSequence entropy mixer.
    """
    if any(p < 0 for p in parts):
        raise ValueError("seed parts must be non-negative")
    return int(np.random.SeedSequence(list(parts)).generate_state(1, np.uint64)[0])


def spawn_rng(*parts: int) -> np.random.Generator:
    return np.random.default_rng(derive_seed(*parts))
