from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from ..exceptions import InvalidPatternException
from .json_serialize import JsonSerialize

Edge = Tuple[int, ...]


class Pattern(JsonSerialize):
    """The graph or r-uniform hypergraph G to embed.

    Vertices are 0..vertex_count-1 (their index is the fixed total order);
    edges are sorted tuples kept in lexicographic order, which is the edge order.
    """

    def __init__(self, vertex_count: int, edges: Sequence[Sequence[int]], r: Optional[int] = None,
                 parts: Optional[Sequence[int]] = None):
        if vertex_count < 0:
            raise InvalidPatternException("negative vertex count")
        sorted_edges = [tuple(sorted(int(u) for u in edge)) for edge in edges]
        canonical = sorted(set(sorted_edges))
        if len(canonical) != len(sorted_edges):
            raise InvalidPatternException("duplicate edges")
        if r is None:
            r = len(canonical[0]) if canonical else 2
        for edge in canonical:
            if len(edge) != r or len(set(edge)) != r:
                raise InvalidPatternException("edge {} is not a {}-set".format(list(edge), r))
            if edge[0] < 0 or edge[-1] >= vertex_count:
                raise InvalidPatternException("edge {} out of vertex range".format(list(edge)))
        self.vertex_count = vertex_count
        self.r = r
        self.edges = tuple(canonical)
        self.parts = None
        if parts is not None:
            self._set_parts(parts)
        self._profile = None

    def _set_parts(self, parts: Sequence[int]):
        if len(parts) != self.vertex_count:
            raise InvalidPatternException("parts array has {} entries for {} vertices"
                                          .format(len(parts), self.vertex_count))
        if any(part < 0 for part in parts):
            raise InvalidPatternException("negative part index")
        if self.r != 2:
            raise InvalidPatternException("partitions are only defined for graph patterns")
        for u, v in self.edges:
            if parts[u] == parts[v]:
                raise InvalidPatternException("edge {} lies inside part {}".format([u, v], parts[u]))
        self.parts = tuple(int(part) for part in parts)

    def with_parts(self, parts: Sequence[int]) -> 'Pattern':
        return Pattern(self.vertex_count, self.edges, self.r, parts)

    @property
    def is_graph(self) -> bool:
        return self.r == 2

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def part_sizes(self) -> Dict[int, int]:
        if self.parts is None:
            return {0: self.vertex_count}
        return dict(sorted(Counter(self.parts).items()))

    def part_members(self) -> Dict[int, List[int]]:
        members = dict()
        for u in range(self.vertex_count):
            members.setdefault(self.part_of(u), list()).append(u)
        return members

    def part_of(self, u: int) -> int:
        if self.parts is None:
            return 0
        return self.parts[u]

    def neighbors(self) -> List[List[int]]:
        adjacency = [list() for _ in range(self.vertex_count)]
        for edge in self.edges:
            for u in edge:
                adjacency[u].extend(v for v in edge if v != u)
        return [sorted(set(row)) for row in adjacency]

    def degrees(self) -> List[int]:
        degree = [0] * self.vertex_count
        for edge in self.edges:
            for u in edge:
                degree[u] += 1
        return degree

    def profile(self) -> 'DegreeProfile':
        if self._profile is None:
            self._profile = DegreeProfile.of(self)
        return self._profile

    def induced(self, vertices: Sequence[int]) -> 'Pattern':
        """Sub-pattern on `vertices`, relabelled to 0.. in the given order."""
        relabel = {u: i for i, u in enumerate(vertices)}
        edges = [tuple(relabel[u] for u in edge) for edge in self.edges if all(u in relabel for u in edge)]
        parts = None if self.parts is None else [self.parts[u] for u in vertices]
        return Pattern(len(vertices), edges, self.r, parts)

    def to_networkx(self) -> nx.Graph:
        if not self.is_graph:
            raise InvalidPatternException("only graph patterns convert to networkx graphs")
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.edges)
        if self.parts is not None:
            nx.set_node_attributes(graph, dict(enumerate(self.parts)), "part")
        return graph

    @staticmethod
    def from_networkx(graph: nx.Graph, parts: Optional[Sequence[int]] = None) -> 'Pattern':
        order = sorted(graph.nodes())
        relabel = {node: i for i, node in enumerate(order)}
        edges = [(relabel[u], relabel[v]) for u, v in graph.edges()]
        if parts is None and all("part" in graph.nodes[node] for node in order) and order:
            parts = [graph.nodes[node]["part"] for node in order]
        return Pattern(len(order), edges, 2, parts)

    def to_json_dict(self):
        data = {
            'vertex_count': self.vertex_count,
            'r': self.r,
            'edges': [list(edge) for edge in self.edges],
        }
        if self.parts is not None:
            data['parts'] = list(self.parts)
        return data

    @staticmethod
    def from_json_dict(data: dict) -> 'Pattern':
        edges = data['edges']
        vertex_count = data.get('vertex_count')
        if vertex_count is None:
            vertex_count = len(data['parts']) if 'parts' in data else 1 + max((max(e) for e in edges), default=-1)
        return Pattern(int(vertex_count), edges, data.get('r'), data.get('parts'))

    def to_text(self) -> str:
        return "\n".join(" ".join(str(u) for u in edge) for edge in self.edges) + "\n"

    @staticmethod
    def from_text(text: str, vertex_count: Optional[int] = None) -> 'Pattern':
        edges = [[int(token) for token in line.split()] for line in text.splitlines()
                 if line.strip() and not line.lstrip().startswith('#')]
        if vertex_count is None:
            vertex_count = 1 + max((max(edge) for edge in edges), default=-1)
        return Pattern(vertex_count, edges)

    def __repr__(self):
        return "Pattern(v={}, e={}, r={})".format(self.vertex_count, self.edge_count, self.r)


class DegreeProfile(JsonSerialize):
    """Maximum i-degrees Δ_i for i = 0..r-1 (Δ_0 = |E|, Δ_1 = max vertex degree)."""

    def __init__(self, vertex_count: int, r: int, deltas: Sequence[int]):
        self.vertex_count = vertex_count
        self.r = r
        self.deltas = tuple(deltas)

    @staticmethod
    def of(pattern: Pattern) -> 'DegreeProfile':
        deltas = [pattern.edge_count]
        for order in range(1, pattern.r):
            counts = Counter()
            for edge in pattern.edges:
                counts.update(combinations(edge, order))
            deltas.append(max(counts.values(), default=0))
        return DegreeProfile(pattern.vertex_count, pattern.r, deltas)

    @property
    def max_degree(self) -> int:
        return self.deltas[1] if len(self.deltas) > 1 else 0

    def delta(self, order: int) -> int:
        if order >= self.r:
            return 1 if self.deltas[0] else 0
        return self.deltas[order]

    def satisfies_cascade(self) -> bool:
        """Δ_{i-1} <= (N - i + 1)·Δ_i for every i in 1..r-1."""
        n = self.vertex_count
        return all(self.deltas[i - 1] <= (n - i + 1) * self.deltas[i] for i in range(1, len(self.deltas)))

    def to_json_dict(self):
        return {'vertex_count': self.vertex_count, 'r': self.r, 'deltas': list(self.deltas)}


@dataclass(frozen=True)
class PatternCherry:
    """Path u1-u2-u3 with apex u2 and u1 < u3."""
    u1: int
    u2: int
    u3: int

    @property
    def support(self) -> Tuple[int, int, int]:
        return (self.u1, self.u2, self.u3)

    @property
    def edges(self) -> Tuple[Edge, Edge]:
        return (tuple(sorted((self.u1, self.u2))), tuple(sorted((self.u2, self.u3))))


@dataclass(frozen=True)
class PatternQuadruple:
    """Disjoint edges u1u2, u3u4 with u1 < u2, u3 < u4, u1 < u3."""
    u1: int
    u2: int
    u3: int
    u4: int

    @property
    def support(self) -> Tuple[int, int, int, int]:
        return (self.u1, self.u2, self.u3, self.u4)

    @property
    def edges(self) -> Tuple[Edge, Edge]:
        return ((self.u1, self.u2), (self.u3, self.u4))


@dataclass(frozen=True)
class EdgePair:
    """Hypergraph cherry of overlap i: edges e1 < e2 with |e1 ∩ e2| = i."""
    e1: Edge
    e2: Edge
    overlap: int

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(sorted(set(self.e1) | set(self.e2)))

    @property
    def edges(self) -> Tuple[Edge, Edge]:
        return (self.e1, self.e2)
