"""Seedable, splittable randomness for reproducible parallel trials.

Philox is counter-based: every (seed, stream) pair names an independent
stream, so concurrent trials never share state and replays are exact.
"""

from __future__ import annotations

import numpy as np

def trial_rng(seed: int, stream: int = 0) -> np.random.Generator:
    """Generator for one trial; distinct (seed, stream) pairs are independent."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence((seed, stream))))
