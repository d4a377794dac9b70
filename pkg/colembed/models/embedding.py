from typing import Dict, List, Optional, Sequence

from .json_serialize import JsonSerialize
from .events import Violation

PROPER = "proper"
RAINBOW = "rainbow"
MODES = (PROPER, RAINBOW)

FIRST_FOUND = "firstFound"
RANDOM = "random"
SCAN_ORDERS = (FIRST_FOUND, RANDOM)


class Embedding(JsonSerialize):
    """f: pattern vertex -> host vertex, stored as images[u].

    Mutable on purpose: the resampling loop swaps images in place.
    """

    def __init__(self, images: Sequence[int]):
        self.images = [int(v) for v in images]
        self._preimage = None

    def __len__(self):
        return len(self.images)

    def __getitem__(self, u: int) -> int:
        return self.images[u]

    def preimage(self) -> Dict[int, int]:
        if self._preimage is None:
            self._preimage = {v: u for u, v in enumerate(self.images)}
        return self._preimage

    def assign(self, u: int, v: int):
        """Set f(u) = v, swapping with the current preimage of v if any."""
        preimage = self.preimage()
        old = self.images[u]
        if old == v:
            return
        other = preimage.get(v)
        if other is not None:
            self.images[other] = old
            preimage[old] = other
        else:
            del preimage[old]
        self.images[u] = v
        preimage[v] = u

    def is_injective(self) -> bool:
        return len(set(self.images)) == len(self.images)

    def is_part_respecting(self, pattern, host) -> bool:
        shape = host.shape
        if not shape.is_multipartite:
            return True
        return all(shape.part_of(v) == pattern.part_of(u) for u, v in enumerate(self.images))

    def copy(self) -> 'Embedding':
        return Embedding(self.images)

    def to_json_dict(self):
        return list(self.images)

    def __eq__(self, other):
        return isinstance(other, Embedding) and self.images == other.images

    def __repr__(self):
        return "Embedding({})".format(self.images)


class EmbedConfig:

    def __init__(self, mode: str = PROPER, max_resamples: Optional[int] = None, restarts: int = 10,
                 seed: Optional[int] = None, scan_order: str = FIRST_FOUND, parallel: bool = False,
                 record_transcript: bool = False):
        if mode not in MODES:
            raise ValueError("mode must be one of {}".format(MODES))
        if scan_order not in SCAN_ORDERS:
            raise ValueError("scan order must be one of {}".format(SCAN_ORDERS))
        if max_resamples is not None and max_resamples < 1:
            raise ValueError("max_resamples must be >= 1")
        if restarts < 1:
            raise ValueError("restarts must be >= 1")
        self.mode = mode
        self.max_resamples = max_resamples
        self.restarts = restarts
        self.seed = seed
        self.scan_order = scan_order
        self.parallel = parallel
        self.record_transcript = record_transcript

    @staticmethod
    def from_config(config, **overrides) -> 'EmbedConfig':
        values = {
            'restarts': config.restarts,
            'seed': config.get_default_seed(),
            'scan_order': config.scan_order,
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return EmbedConfig(**values)


class EmbedReport(JsonSerialize):

    def __init__(self, mode: str, seed: int, success: bool, embedding: Optional[Embedding],
                 resamples: int, restarts: int, last_violation: Optional[Violation],
                 successful_restart: Optional[int] = None, max_resamples: Optional[int] = None,
                 transcript: Optional[List[str]] = None):
        self.mode = mode
        self.seed = seed
        self.success = success
        self.embedding = embedding
        self.resamples = resamples
        self.restarts = restarts
        self.last_violation = last_violation
        self.successful_restart = successful_restart
        self.max_resamples = max_resamples
        self.transcript = transcript if transcript is not None else list()

    def to_json_dict(self):
        return {
            'mode': self.mode,
            'seed': self.seed,
            'success': self.success,
            'embedding': None if self.embedding is None else self.embedding.to_json_dict(),
            'resamples': self.resamples,
            'restarts': self.restarts,
            'successful_restart': self.successful_restart,
            'max_resamples': self.max_resamples,
            'last_violation': None if self.last_violation is None else self.last_violation.to_json_dict(),
        }

