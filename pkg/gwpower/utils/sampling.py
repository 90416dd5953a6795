"""
Seeded sampling of ring elements and series for property runs
"""

from typing import Sequence

import numpy as np

from gwpower.utils.helpers import load_run_config


def case_rng(seed: int, case: int) -> np.random.Generator:
    """Independent generator for one property case, stable under any evaluation order"""
    return np.random.default_rng([seed, case])


def sampling_config() -> dict:
    return load_run_config()["sampling"]


def pick(rng: np.random.Generator, pool: Sequence[int]) -> int:
    return int(pool[int(rng.integers(len(pool)))])


def small_nonzero(rng: np.random.Generator, bound: int) -> int:
    value = int(rng.integers(1, bound + 1))
    return value if rng.random() < 0.5 else -value


__all__ = ["case_rng", "sampling_config", "pick", "small_nonzero"]
