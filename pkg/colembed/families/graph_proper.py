from collections import defaultdict
from typing import Iterator, List, Tuple

from ..abstractions import BadEventFamilyBase
from ..models import BadEvent, ColoredHost, Embedding, HostShape, Pattern, Violation, PROPER
from ..models.events import CHERRY, MONOCHROME_CHERRY
from ..pattern_analysis import enumerate_cherries


class GraphProperFamily(BadEventFamilyBase):
    """Monochromatic cherries u1-u2-u3 of a graph pattern."""

    str_name = "graph proper"
    mode = PROPER

    def __init__(self, pattern: Pattern, shape: HostShape):
        super().__init__(pattern, shape)
        self.cherries = enumerate_cherries(pattern)
        edge_index = {edge: i for i, edge in enumerate(pattern.edges)}
        self._cherry_edges = [tuple(edge_index[edge] for edge in cherry.edges) for cherry in self.cherries]

    def supports(self) -> List[object]:
        return list(self.cherries)

    def violations(self, embedding: Embedding, host: ColoredHost) -> Iterator[Violation]:
        colors = self.edge_colors(embedding, host)
        yield from self._cherry_violations(embedding, colors)

    def _cherry_violations(self, embedding: Embedding, colors: List[int]) -> Iterator[Violation]:
        images = embedding.images
        for cherry, (a, b) in zip(self.cherries, self._cherry_edges):
            if colors[a] == colors[b]:
                host_edges = [sorted(images[u] for u in edge) for edge in cherry.edges]
                yield Violation(MONOCHROME_CHERRY, cherry.support, cherry.edges, host_edges, (colors[a], colors[b]))

    def bad_events(self, host: ColoredHost) -> Iterator[BadEvent]:
        yield from self._cherry_events(host)

    def _cherry_events(self, host: ColoredHost) -> Iterator[BadEvent]:
        part_vertices = self.shape.part_vertices
        part_of = self.pattern.part_of
        for cherry in self.cherries:
            u1, u2, u3 = cherry.support
            first_part = part_vertices(part_of(u1))
            third_part = part_vertices(part_of(u3))
            for v2 in part_vertices(part_of(u2)):
                by_color = defaultdict(list)
                for v1 in first_part:
                    if v1 != v2:
                        by_color[host.color_of_pair(v1, v2)].append(v1)
                for v3 in third_part:
                    if v3 == v2:
                        continue
                    for v1 in by_color.get(host.color_of_pair(v2, v3), ()):
                        if v1 != v3:
                            yield BadEvent(CHERRY, cherry.support, (v1, v2, v3))

    def class_keys(self, event: BadEvent) -> Tuple[str, str]:
        return ('I_G', 'I_K')
