from typing import List, Optional, Union

import numpy as np

SeedLike = Union[None, int, np.random.Generator]


def new_seed() -> int:
    """Fresh 64-bit seed drawn from OS entropy."""
    return int(np.random.SeedSequence().generate_state(1, dtype=np.uint64)[0])


def resolve_seed(seed: Optional[int], config=None) -> int:
    if seed is not None:
        return int(seed)
    if config is not None and config.get_default_seed() is not None:
        return config.get_default_seed()
    return new_seed()


def make_rng(seed: SeedLike) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def spawn_rngs(seed: int, count: int) -> List[np.random.Generator]:
    """Independent child generators, one per restart."""
    children = np.random.SeedSequence(seed).spawn(count)
    return [np.random.default_rng(child) for child in children]
