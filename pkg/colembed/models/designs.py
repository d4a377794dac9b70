from collections import Counter
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .host import ColoredHost
from .json_serialize import JsonSerialize
from .pattern import Pattern


class ProjectivePlane(JsonSerialize):
    """PG(2, q) over Z_q: points and lines are normalized vectors of Z_q^3.

    Point p lies on line l iff p·l = 0 (mod q). `lines[j]` holds the indices of
    the points on line j.
    """

    def __init__(self, q: int, points: Sequence[Tuple[int, int, int]], lines: Sequence[Sequence[int]]):
        self.q = q
        self.points = tuple(tuple(point) for point in points)
        self.lines = tuple(tuple(sorted(line)) for line in lines)

    @property
    def order(self) -> int:
        return self.q * self.q + self.q + 1

    def incidence_matrix(self) -> np.ndarray:
        """Points as rows, lines as columns."""
        matrix = np.zeros((len(self.points), len(self.lines)), dtype=int)
        for j, line in enumerate(self.lines):
            for i in line:
                matrix[i, j] = 1
        return matrix

    def lines_through(self, point: int) -> List[int]:
        return [j for j, line in enumerate(self.lines) if point in line]

    def check(self) -> bool:
        """Two points share exactly one line, two lines share exactly one point, lines have q+1 points."""
        if any(len(line) != self.q + 1 for line in self.lines):
            return False
        pair_lines = Counter(pair for line in self.lines for pair in combinations(line, 2))
        if any(pair_lines[pair] != 1 for pair in combinations(range(len(self.points)), 2)):
            return False
        line_sets = [set(line) for line in self.lines]
        return all(len(first & second) == 1 for first, second in combinations(line_sets, 2))

    def to_json_dict(self):
        return {'q': self.q, 'points': [list(point) for point in self.points],
                'lines': [list(line) for line in self.lines]}


class DesignHypergraph(JsonSerialize):
    """r-uniform design on m vertices in which every (ell+1)-set lies in exactly one edge."""

    def __init__(self, r: int, ell: int, m: int, edges: Sequence[Sequence[int]]):
        self.r = r
        self.ell = ell
        self.m = m
        self.edges = tuple(sorted(tuple(sorted(edge)) for edge in edges))

    @property
    def ell_degree(self) -> int:
        return (self.m - self.ell) // (self.r - self.ell)

    def check(self) -> bool:
        covered = Counter(subset for edge in self.edges for subset in combinations(edge, self.ell + 1))
        return all(covered[subset] == 1 for subset in combinations(range(self.m), self.ell + 1))

    def ell_set_degrees(self) -> Dict[Tuple[int, ...], int]:
        degrees = Counter(subset for edge in self.edges for subset in combinations(edge, self.ell))
        return {subset: degrees[subset] for subset in combinations(range(self.m), self.ell)}

    def to_pattern(self) -> Pattern:
        return Pattern(self.m, self.edges, self.r)

    def incidence_matrix(self) -> np.ndarray:
        """Vertices as rows, edges as columns."""
        matrix = np.zeros((self.m, len(self.edges)), dtype=int)
        for j, edge in enumerate(self.edges):
            for v in edge:
                matrix[v, j] = 1
        return matrix

    def to_json_dict(self):
        return {'r': self.r, 'ell': self.ell, 'm': self.m, 'edges': [list(edge) for edge in self.edges]}


class ClusteredColoring(JsonSerialize):
    """A fan coloring of K_{m⊗n} together with the clusters of every part."""

    def __init__(self, host: ColoredHost, clusters: Sequence[Sequence[Sequence[int]]]):
        self.host = host
        self.clusters = tuple(tuple(tuple(cluster) for cluster in part) for part in clusters)

    def cluster_sizes(self) -> List[List[int]]:
        return [[len(cluster) for cluster in part] for part in self.clusters]

    def cluster_of(self, v: int) -> int:
        part = self.host.shape.part_of(v)
        for j, cluster in enumerate(self.clusters[part]):
            if v in cluster:
                return j
        raise KeyError(v)

    def to_json_dict(self):
        data = self.host.to_json_dict()
        data['clusters'] = [[list(cluster) for cluster in part] for part in self.clusters]
        return data
