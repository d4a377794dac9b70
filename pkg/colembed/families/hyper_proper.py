from collections import defaultdict
from itertools import permutations
from typing import Iterator, List, Tuple

from ..models import BadEvent, ColoredHost, Embedding, HostShape, Pattern, Violation, PROPER
from ..models.events import OVERLAP, OVERLAP_PAIR, REPEATED_COLOR_PAIR
from ..abstractions import BadEventFamilyBase
from ..pattern_analysis import enumerate_overlap_pairs


class HyperProperFamily(BadEventFamilyBase):
    """Ordered edge pairs e1 < e2 of an r-graph meeting in 1..r-1 vertices."""

    str_name = "hypergraph proper"
    mode = PROPER

    def __init__(self, pattern: Pattern, shape: HostShape):
        super().__init__(pattern, shape)
        self.overlaps = self._overlaps(pattern.r)
        self.pairs = [pair for overlap in self.overlaps for pair in enumerate_overlap_pairs(pattern, overlap)]

    @staticmethod
    def _overlaps(r: int) -> range:
        return range(1, r)

    def supports(self) -> List[object]:
        return list(self.pairs)

    def violations(self, embedding: Embedding, host: ColoredHost) -> Iterator[Violation]:
        colors = self.edge_colors(embedding, host)
        images = embedding.images
        edges = self.pattern.edges
        # Image edges indexed by color; only same-colored pairs are compared
        seen = defaultdict(list)
        for j, edge in enumerate(edges):
            for i in seen[colors[j]]:
                earlier = edges[i]
                overlap = len(set(earlier) & set(edge))
                if overlap in self.overlaps:
                    kind = OVERLAP_PAIR if overlap else REPEATED_COLOR_PAIR
                    host_edges = [sorted(images[u] for u in e) for e in (earlier, edge)]
                    yield Violation(kind, sorted(set(earlier) | set(edge)), (earlier, edge), host_edges,
                                    (colors[i], colors[j]))
            seen[colors[j]].append(j)

    def bad_events(self, host: ColoredHost) -> Iterator[BadEvent]:
        n = self.shape.n
        for pair in self.pairs:
            support = pair.support
            position = {u: i for i, u in enumerate(support)}
            first = [position[u] for u in pair.e1]
            second = [position[u] for u in pair.e2]
            for image in permutations(range(n), len(support)):
                if host.color_of([image[i] for i in first]) == host.color_of([image[i] for i in second]):
                    yield BadEvent(OVERLAP, support, image, pair.overlap)

    def class_keys(self, event: BadEvent) -> Tuple[str, str]:
        return ('I_G[{}]'.format(event.overlap), 'I_K[{}]'.format(event.overlap))
