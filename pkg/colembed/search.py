import logging
from collections import Counter
from math import perm
from typing import Dict, List, Optional

from .abstractions import check_fit
from .exceptions import TooLargeException
from .models import ColoredHost, Embedding, Pattern, RAINBOW

logger = logging.getLogger(__name__)


def search_space_size(pattern: Pattern, host: ColoredHost) -> int:
    """Π (n)_{|U_i|}: the number of part-respecting injections, before pruning."""
    shape = host.shape
    if not shape.is_multipartite:
        return perm(shape.n, pattern.vertex_count)
    size = 1
    for count in pattern.part_sizes().values():
        size *= perm(shape.n, count)
    return size


def placement_order(pattern: Pattern) -> List[int]:
    """Highest degree first, then always the vertex with most placed neighbours."""
    degrees = pattern.degrees()
    neighbors = pattern.neighbors()
    placed = list()
    placed_set = set()
    links = Counter()
    remaining = set(range(pattern.vertex_count))
    while remaining:
        u = max(remaining, key=lambda v: (links[v], degrees[v], -v))
        placed.append(u)
        placed_set.add(u)
        remaining.discard(u)
        for w in neighbors[u]:
            if w not in placed_set:
                links[w] += 1
    return placed


class ColoredCopySearch:
    """Backtracking over part-respecting injections with incremental color checks.

    Proper mode keeps the colors already used at every pattern vertex; rainbow
    mode keeps one global set of used colors.
    """

    def __init__(self, pattern: Pattern, host: ColoredHost, mode: str, limit: int = 10 ** 8):
        check_fit(pattern, host.shape)
        size = search_space_size(pattern, host)
        if size > limit:
            raise TooLargeException("search space", size, limit)
        self.pattern = pattern
        self.host = host
        self.rainbow = mode == RAINBOW
        self.order = placement_order(pattern)
        position = {u: i for i, u in enumerate(self.order)}
        # Edges completed when their last vertex (in placement order) is placed
        self.closing = {u: list() for u in self.order}
        for edge in pattern.edges:
            self.closing[max(edge, key=lambda v: position[v])].append(edge)
        self.nodes = 0

    def _candidates(self, u: int):
        shape = self.host.shape
        if shape.is_multipartite:
            return shape.part_vertices(self.pattern.part_of(u))
        return range(shape.n)

    def run(self) -> Optional[Embedding]:
        images: Dict[int, int] = dict()
        used = set()
        vertex_colors = [Counter() for _ in range(self.pattern.vertex_count)]
        global_colors = set()
        found = self._extend(0, images, used, vertex_colors, global_colors)
        logger.debug("search visited %d nodes", self.nodes)
        if not found:
            return None
        return Embedding([images[u] for u in range(self.pattern.vertex_count)])

    def _extend(self, depth, images, used, vertex_colors, global_colors) -> bool:
        if depth == len(self.order):
            return True
        u = self.order[depth]
        for v in self._candidates(u):
            if v in used:
                continue
            self.nodes += 1
            images[u] = v
            added = self._place(u, images, vertex_colors, global_colors)
            if added is not None:
                used.add(v)
                if self._extend(depth + 1, images, used, vertex_colors, global_colors):
                    return True
                used.discard(v)
                self._unplace(added, vertex_colors, global_colors)
            del images[u]
        return False

    def _place(self, u, images, vertex_colors, global_colors):
        """Color the edges closed by u; None (with nothing recorded) on a conflict."""
        added = list()
        for edge in self.closing[u]:
            color = self.host.color_of([images[w] for w in edge])
            if self.rainbow:
                clash = color in global_colors
            else:
                clash = any(vertex_colors[w][color] for w in edge)
            if clash:
                self._unplace(added, vertex_colors, global_colors)
                return None
            for w in edge:
                vertex_colors[w][color] += 1
            global_colors.add(color)
            added.append((edge, color))
        return added

    def _unplace(self, added, vertex_colors, global_colors):
        for edge, color in added:
            for w in edge:
                vertex_colors[w][color] -= 1
            global_colors.discard(color)


def find_colored_copy(pattern: Pattern, host: ColoredHost, mode: str, limit: int = 10 ** 8) -> Optional[Embedding]:
    return ColoredCopySearch(pattern, host, mode, limit).run()
