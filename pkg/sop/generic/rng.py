"""Seedable, splittable random streams."""

import numpy as np


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """
    Independent PCG64 stream for one trial.

    Streams depend only on (seed, trial), so any schedule of trials over
    workers draws the same samples.
    """
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(trial,))))


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
