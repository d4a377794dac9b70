from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from ..exceptions import InvalidShapeException
from .json_serialize import JsonSerialize

MULTIPARTITE = "multipartite"
HYPERGRAPH = "hypergraph"

Edge = Tuple[int, ...]


@dataclass(frozen=True)
class HostShape(JsonSerialize):
    """K_{m⊗n} (part-major numbering, part i = [i·n, (i+1)·n)) or K_n^(r)."""
    kind: str
    n: int
    m: int = 1
    r: int = 2

    @staticmethod
    def multipartite(m: int, n: int) -> 'HostShape':
        shape = HostShape(MULTIPARTITE, n=n, m=m, r=2)
        shape.validate()
        return shape

    @staticmethod
    def hypergraph(n: int, r: int) -> 'HostShape':
        shape = HostShape(HYPERGRAPH, n=n, m=1, r=r)
        shape.validate()
        return shape

    def validate(self):
        if self.kind == MULTIPARTITE:
            if self.m < 2 or self.n < 1 or self.r != 2:
                raise InvalidShapeException("multipartite host needs m >= 2, n >= 1 (got m={}, n={})"
                                            .format(self.m, self.n))
        elif self.kind == HYPERGRAPH:
            if self.r < 2 or self.r > self.n or self.m != 1:
                raise InvalidShapeException("hypergraph host needs 2 <= r <= n (got n={}, r={})"
                                            .format(self.n, self.r))
        else:
            raise InvalidShapeException("unknown host kind: {}".format(self.kind))

    @property
    def is_multipartite(self) -> bool:
        return self.kind == MULTIPARTITE

    @property
    def part_count(self) -> int:
        return self.m

    @property
    def vertex_count(self) -> int:
        return self.m * self.n

    @property
    def edge_count(self) -> int:
        if self.is_multipartite:
            return comb(self.m, 2) * self.n * self.n
        return comb(self.n, self.r)

    def part_of(self, v: int) -> int:
        if self.is_multipartite:
            return v // self.n
        return 0

    def part_vertices(self, part: int) -> range:
        if self.is_multipartite:
            return range(part * self.n, (part + 1) * self.n)
        return range(self.n)

    def is_edge(self, edge: Sequence[int]) -> bool:
        if len(edge) != self.r or len(set(edge)) != self.r:
            return False
        if any(v < 0 or v >= self.vertex_count for v in edge):
            return False
        if self.is_multipartite:
            return self.part_of(edge[0]) != self.part_of(edge[1])
        return True

    def edges(self) -> Iterator[Edge]:
        """Every legal edge once, in lexicographic order of sorted tuples."""
        if self.is_multipartite:
            total = self.vertex_count
            for u in range(total):
                first_other = (self.part_of(u) + 1) * self.n
                for v in range(first_other, total):
                    yield (u, v)
        else:
            yield from combinations(range(self.n), self.r)

    def to_json_dict(self):
        return {'kind': self.kind, 'm': self.m, 'n': self.n, 'r': self.r}

    @staticmethod
    def from_json_dict(data: dict) -> 'HostShape':
        kind = data['kind']
        if kind == MULTIPARTITE:
            return HostShape.multipartite(int(data['m']), int(data['n']))
        return HostShape.hypergraph(int(data['n']), int(data.get('r', 2)))


def canonical_edge(vertices: Iterable[int]) -> Edge:
    return tuple(sorted(vertices))


class ColoredHost(JsonSerialize):
    """A host shape with a total edge coloring, normalized to dense color ids.

    Dense ids follow first appearance in canonical edge order; the original
    labels are kept so that Latin squares and files round-trip.
    """

    def __init__(self, shape: HostShape, coloring: Dict[Edge, object]):
        shape.validate()
        self.shape = shape
        edges = list(shape.edges())
        if len(coloring) != len(edges):
            raise InvalidShapeException("coloring has {} edges, host has {}".format(len(coloring), len(edges)))
        label_ids = dict()
        labels = list()
        colors = list()
        for edge in edges:
            if edge not in coloring:
                raise InvalidShapeException("edge {} is not colored".format(edge))
            label = coloring[edge]
            if label not in label_ids:
                label_ids[label] = len(labels)
                labels.append(label)
            colors.append(label_ids[label])
        self.edges = tuple(edges)
        self.colors = tuple(colors)
        self.labels = tuple(labels)
        self._edge_index = {edge: i for i, edge in enumerate(edges)}
        self._class_sizes = None

    @staticmethod
    def from_edge_colors(shape: HostShape, edges: Sequence[Sequence[int]], colors: Sequence[object]) -> 'ColoredHost':
        if len(edges) != len(colors):
            raise InvalidShapeException("edges and colors differ in length")
        coloring = dict()
        for edge, color in zip(edges, colors):
            key = canonical_edge(edge)
            if not shape.is_edge(key):
                raise InvalidShapeException("{} is not an edge of the host".format(list(edge)))
            if key in coloring:
                raise InvalidShapeException("edge {} colored twice".format(list(key)))
            coloring[key] = tuple(color) if isinstance(color, list) else color
        return ColoredHost(shape, coloring)

    @property
    def num_colors(self) -> int:
        return len(self.labels)

    def __len__(self):
        return len(self.edges)

    def color_of(self, vertices: Sequence[int]) -> int:
        return self.colors[self._edge_index[canonical_edge(vertices)]]

    def color_of_pair(self, u: int, v: int) -> int:
        if u < v:
            return self.colors[self._edge_index[(u, v)]]
        return self.colors[self._edge_index[(v, u)]]

    def has_edge(self, vertices: Sequence[int]) -> bool:
        return canonical_edge(vertices) in self._edge_index

    def label_of(self, color: int):
        return self.labels[color]

    def class_sizes(self) -> List[int]:
        if self._class_sizes is None:
            sizes = [0] * self.num_colors
            for color in self.colors:
                sizes[color] += 1
            self._class_sizes = sizes
        return list(self._class_sizes)

    def to_json_dict(self):
        return {
            'shape': self.shape.to_json_dict(),
            'edges': [list(edge) for edge in self.edges],
            'colors': [self.labels[color] for color in self.colors],
        }

    @staticmethod
    def from_json_dict(data: dict) -> 'ColoredHost':
        shape = HostShape.from_json_dict(data['shape'])
        return ColoredHost.from_edge_colors(shape, data['edges'], data['colors'])

    def to_text(self) -> str:
        shape = self.shape
        lines = ["# {} {} {} {}".format(shape.kind, shape.m, shape.n, shape.r)]
        for edge, color in zip(self.edges, self.colors):
            lines.append(" ".join(str(v) for v in edge) + " " + _format_label(self.labels[color]))
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_text(text: str, shape: Optional[HostShape] = None) -> 'ColoredHost':
        """Parse "v1 .. vr color" lines; the shape comes from a "# kind m n r" header if not given."""
        edges = list()
        colors = list()
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            if line.startswith('#'):
                header = line[1:].split()
                if shape is None and len(header) == 4 and header[0] in (MULTIPARTITE, HYPERGRAPH):
                    shape = HostShape.from_json_dict(dict(zip(("kind", "m", "n", "r"), header)))
                continue
            if shape is None:
                raise InvalidShapeException("host text needs a '# kind m n r' header line")
            fields = line.split()
            if len(fields) != shape.r + 1:
                raise InvalidShapeException("expected {} fields per line: {!r}".format(shape.r + 1, line))
            edges.append([int(v) for v in fields[:-1]])
            colors.append(_parse_label(fields[-1]))
        if shape is None:
            raise InvalidShapeException("empty host text")
        return ColoredHost.from_edge_colors(shape, edges, colors)


def _format_label(label) -> str:
    if isinstance(label, tuple):
        return ":".join(str(part) for part in label)
    return str(label)


def _parse_label(token: str):
    if ":" in token:
        return tuple(_parse_label(part) for part in token.split(":"))
    try:
        return int(token)
    except ValueError:
        return token


class BoundednessReport(JsonSerialize):

    def __init__(self, k_local: int, k_global: int, per_color_sizes: List[int]):
        self.k_local = k_local
        self.k_global = k_global
        self.per_color_sizes = per_color_sizes
        self.size_histogram = dict(sorted(Counter(per_color_sizes).items()))

    def is_bounded(self, k: int, mode: str = "global") -> bool:
        if mode == "local":
            return self.k_local <= k
        return self.k_global <= k

    def to_json_dict(self):
        return {
            'k_local': self.k_local,
            'k_global': self.k_global,
            'num_colors': len(self.per_color_sizes),
            'per_color_sizes': list(self.per_color_sizes),
            'size_histogram': {str(size): count for size, count in self.size_histogram.items()},
        }

    def __eq__(self, other):
        return isinstance(other, BoundednessReport) and self.to_json_dict() == other.to_json_dict()

    def __repr__(self):
        return "BoundednessReport(k_local={}, k_global={})".format(self.k_local, self.k_global)

