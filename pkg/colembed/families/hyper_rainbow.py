from ..models import RAINBOW
from .hyper_proper import HyperProperFamily


class HyperRainbowFamily(HyperProperFamily):
    """Adds disjoint same-colored edge pairs (overlap 0)."""

    str_name = "hypergraph rainbow"
    mode = RAINBOW

    @staticmethod
    def _overlaps(r: int) -> range:
        return range(0, r)
