from ..models import HostShape, Pattern, PROPER, RAINBOW
from .graph_proper import GraphProperFamily
from .graph_rainbow import GraphRainbowFamily
from .hyper_proper import HyperProperFamily
from .hyper_rainbow import HyperRainbowFamily


def family_for(pattern: Pattern, shape: HostShape, mode: str):
    if mode not in (PROPER, RAINBOW):
        raise ValueError("mode must be proper or rainbow")
    if pattern.is_graph:
        return GraphProperFamily(pattern, shape) if mode == PROPER else GraphRainbowFamily(pattern, shape)
    return HyperProperFamily(pattern, shape) if mode == PROPER else HyperRainbowFamily(pattern, shape)
