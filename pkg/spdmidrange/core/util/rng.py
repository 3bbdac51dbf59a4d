"""
==============
RANDOM STREAMS
==============

Every random draw in `spdmidrange` goes through an explicit `numpy.random.Generator`.

Experiments derive one independent stream per (configuration, run) from a single master seed
with the counter scheme `SeedSequence([seed, config_index, run_index])`,
so each run can be reproduced on its own without replaying the others.
"""


import numpy as np

from .config import SpdConfig


type RandomStream = np.random.Generator


def make_stream(seed: int | None = None) -> RandomStream:
    """Return a stream seeded from a 64-bit integer (default: `SpdConfig.DEFAULT_SEED`)."""
    return np.random.default_rng(np.random.SeedSequence(SpdConfig.DEFAULT_SEED if seed is None else seed))


def run_stream(seed: int, *counters: int) -> RandomStream:
    """Return the stream of one run, addressed by counters below the master seed."""
    return np.random.default_rng(np.random.SeedSequence([seed, *counters]))
