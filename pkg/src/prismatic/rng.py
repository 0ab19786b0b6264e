"""Seeded randomness.  Every generator receives its RNG explicitly; nothing is global."""

from __future__ import annotations

import numpy as np


def make_rng(seed: int) -> np.random.Generator:
    # Philox is counter-based, so streams are reproducible across platforms.
    return np.random.Generator(np.random.Philox(int(seed)))


def spawn(rng: np.random.Generator) -> np.random.Generator:
    return make_rng(int(rng.integers(0, 2**63 - 1)))
