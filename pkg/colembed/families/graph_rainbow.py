from collections import defaultdict
from typing import Iterator, List, Tuple

from ..models import BadEvent, ColoredHost, Embedding, HostShape, Pattern, Violation, RAINBOW
from ..models.events import QUADRUPLE, REPEATED_COLOR_PAIR
from ..pattern_analysis import enumerate_quadruples
from .graph_proper import GraphProperFamily


class GraphRainbowFamily(GraphProperFamily):
    """Monochromatic cherries plus quadruples: disjoint edges u1u2, u3u4 sharing a color."""

    str_name = "graph rainbow"
    mode = RAINBOW

    def __init__(self, pattern: Pattern, shape: HostShape):
        super().__init__(pattern, shape)
        self.quadruples = enumerate_quadruples(pattern)

    def supports(self) -> List[object]:
        return list(self.cherries) + list(self.quadruples)

    def violations(self, embedding: Embedding, host: ColoredHost) -> Iterator[Violation]:
        colors = self.edge_colors(embedding, host)
        # Cherries first; a shared-vertex collision is already a proper violation
        yield from self._cherry_violations(embedding, colors)
        images = embedding.images
        edges = self.pattern.edges
        seen = defaultdict(list)
        for j, edge in enumerate(edges):
            for i in seen[colors[j]]:
                earlier = edges[i]
                if set(earlier).isdisjoint(edge):
                    host_edges = [sorted(images[u] for u in e) for e in (earlier, edge)]
                    yield Violation(REPEATED_COLOR_PAIR, earlier + edge, (earlier, edge), host_edges,
                                    (colors[i], colors[j]))
            seen[colors[j]].append(j)

    def bad_events(self, host: ColoredHost) -> Iterator[BadEvent]:
        yield from self._cherry_events(host)
        yield from self._quadruple_events(host)

    def _quadruple_events(self, host: ColoredHost) -> Iterator[BadEvent]:
        shape = self.shape
        classes = defaultdict(list)
        for edge, color in zip(host.edges, host.colors):
            classes[color].append(edge)
        part_of = self.pattern.part_of
        for quadruple in self.quadruples:
            u1, u2, u3, u4 = quadruple.support
            for first in host.edges:
                for v1, v2 in _orientations(first, shape, part_of(u1), part_of(u2)):
                    for second in classes[host.color_of_pair(v1, v2)]:
                        for v3, v4 in _orientations(second, shape, part_of(u3), part_of(u4)):
                            if len({v1, v2, v3, v4}) == 4:
                                yield BadEvent(QUADRUPLE, quadruple.support, (v1, v2, v3, v4))

    def class_keys(self, event: BadEvent) -> Tuple[str, str]:
        if event.kind == QUADRUPLE:
            return ('J_G', 'J_K')
        return ('I_G', 'I_K')


def _orientations(edge: Tuple[int, int], shape: HostShape, first_part: int, second_part: int):
    a, b = edge
    if not shape.is_multipartite:
        return ((a, b), (b, a))
    found = list()
    if shape.part_of(a) == first_part and shape.part_of(b) == second_part:
        found.append((a, b))
    if shape.part_of(b) == first_part and shape.part_of(a) == second_part:
        found.append((b, a))
    return found
