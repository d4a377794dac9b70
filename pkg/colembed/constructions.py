import logging
from itertools import combinations
from math import isqrt
from typing import List, Optional, Tuple

import numpy as np

from .exceptions import (DegenerateDimsException, DivisibilityException, NotPrimeException,
                         UnsupportedParametersException)
from .models import ColoredHost, HostShape, JsonSerialize, Pattern
from .models.designs import ClusteredColoring, DesignHypergraph, ProjectivePlane

logger = logging.getLogger(__name__)

POINTS_PART = 0
LINES_PART = 1


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % d for d in range(2, isqrt(q) + 1))


def _normalized_vectors(q: int) -> List[Tuple[int, int, int]]:
    """Nonzero vectors of Z_q^3 whose first nonzero coordinate is 1, lexicographic."""
    vectors = list()
    for a in range(q):
        for b in range(q):
            for c in range(q):
                vector = (a, b, c)
                leading = next((x for x in vector if x), 0)
                if leading == 1:
                    vectors.append(vector)
    return sorted(vectors)


def build_projective_plane(q: int) -> ProjectivePlane:
    if not is_prime(q):
        raise NotPrimeException("projective planes are built over Z_q for prime q (got {})".format(q))
    points = _normalized_vectors(q)
    lines = list()
    for line in points:
        lines.append([i for i, point in enumerate(points)
                      if sum(x * y for x, y in zip(point, line)) % q == 0])
    plane = ProjectivePlane(q, points, lines)
    logger.debug("PG(2, %d): %d points, %d lines", q, len(plane.points), len(plane.lines))
    return plane


def write_incidence_csv(matrix: np.ndarray, path):
    np.savetxt(path, matrix, fmt="%d", delimiter=",")


class PlanePattern(JsonSerialize):
    """The plane pattern with the bookkeeping needed to check its claims."""

    def __init__(self, pattern: Pattern, plane: ProjectivePlane, m: int):
        self.pattern = pattern
        self.plane = plane
        self.m = m
        self.point_vertices = list(range(plane.order))
        self.line_vertices = list(range(plane.order, 2 * plane.order))

    @property
    def part_sizes(self) -> List[int]:
        sizes = self.pattern.part_sizes()
        return [sizes.get(part, 0) for part in range(self.m)]

    @property
    def max_part_size(self) -> int:
        return max(self.part_sizes)

    @property
    def expected_max_degree(self) -> int:
        return (self.plane.q + 1) + (2 * self.m - 2)

    @property
    def within_three_q_squared(self) -> bool:
        return self.max_part_size <= 3 * self.plane.q ** 2

    def incidence_pattern(self) -> Pattern:
        """The sub-pattern induced on points and lines, points in part 0 and lines in part 1."""
        return self.pattern.induced(self.point_vertices + self.line_vertices)

    def to_json_dict(self):
        data = self.pattern.to_json_dict()
        data.update({
            'q': self.plane.q,
            'm': self.m,
            'part_sizes': self.part_sizes,
            'max_degree': self.pattern.profile().max_degree,
            'within_3q2': self.within_three_q_squared,
        })
        return data


def build_plane_pattern(q: int, m: int) -> PlanePattern:
    """Points, lines, the chaining cliques T_i and S_j, and point-line incidences.

    Points sit in part 0 and lines in part 1. T_i is a clique on one vertex of
    each of the parts 1..m-1 joined to p_{i-1} and p_i; S_j is a clique on one
    vertex of each part other than 1, joined to l_{j-1} and l_j.
    """
    if m < 2:
        raise DegenerateDimsException("the plane pattern needs m >= 2 (got {})".format(m))
    plane = build_projective_plane(q)
    size = plane.order
    edges = list()
    parts = [POINTS_PART] * size + [LINES_PART] * size
    for j, line in enumerate(plane.lines):
        edges.extend((i, size + j) for i in line)

    def add_clique(part_list, anchors):
        first = len(parts)
        parts.extend(part_list)
        members = list(range(first, len(parts)))
        edges.extend(combinations(members, 2))
        edges.extend((anchor, member) for anchor in anchors for member in members)

    t_parts = [part for part in range(m) if part != POINTS_PART]
    s_parts = [part for part in range(m) if part != LINES_PART]
    for i in range(1, size):
        add_clique(t_parts, (i - 1, i))
    for j in range(1, size):
        add_clique(s_parts, (size + j - 1, size + j))
    result = PlanePattern(Pattern(len(parts), edges, 2, parts), plane, m)
    if not result.within_three_q_squared:
        logger.warning("plane pattern q=%d m=%d: largest part has %d > 3q^2 = %d vertices",
                       q, m, result.max_part_size, 3 * q * q)
    return result


def split_clusters(vertices: range, count: int) -> List[List[int]]:
    """`count` consecutive clusters; the first len % count get one extra vertex."""
    size, extra = divmod(len(vertices), count)
    clusters = list()
    start = vertices.start
    for j in range(count):
        length = size + (1 if j < extra else 0)
        clusters.append(list(range(start, start + length)))
        start += length
    return clusters


def build_fan_coloring(q: int, m: int, n: int) -> ClusteredColoring:
    """Edge xy with x in part i and y in cluster j' of part i' > i gets color (x, i', j')."""
    shape = HostShape.multipartite(m, n)
    cluster_count = q * q + q
    if n < cluster_count:
        raise DegenerateDimsException("fan coloring needs n >= q^2+q = {} (got {})".format(cluster_count, n))
    clusters = [split_clusters(shape.part_vertices(part), cluster_count) for part in range(m)]
    cluster_index = dict()
    for part_clusters in clusters:
        for j, cluster in enumerate(part_clusters):
            for v in cluster:
                cluster_index[v] = j
    coloring = dict()
    for x, y in shape.edges():
        coloring[(x, y)] = (x, shape.part_of(y), cluster_index[y])
    return ClusteredColoring(ColoredHost(shape, coloring), clusters)


def build_first_ell_coloring(n: int, r: int, ell: int) -> ColoredHost:
    """K_n^(r) colored by the first ell vertices of each sorted edge."""
    if not 1 <= ell <= r - 1 or r - 1 > n - 1:
        raise DegenerateDimsException("first-ell coloring needs 1 <= ell <= r-1 <= n-1 (got n={}, r={}, ell={})"
                                      .format(n, r, ell))
    shape = HostShape.hypergraph(n, r)
    return ColoredHost(shape, {edge: edge[:ell] for edge in shape.edges()})


def _bose_triple_system(m: int) -> List[Tuple[int, int, int]]:
    """STS(m) for m = 6t+3 over Z_v x Z_3 with v = 2t+1, vertex (x, i) numbered x + i·v."""
    v = m // 3
    half = (v + 1) // 2

    def star(a, b):
        return (a + b) * half % v

    triples = [(x, x + v, x + 2 * v) for x in range(v)]
    for x, y in combinations(range(v), 2):
        for i in range(3):
            triples.append((x + i * v, y + i * v, star(x, y) + ((i + 1) % 3) * v))
    return triples


def build_design(r: int, ell: int, m: int) -> DesignHypergraph:
    if r == 2 and ell == 1 and m >= 3:
        edges = list(combinations(range(m), 2))
    elif r == 3 and ell == 1 and m % 6 == 3:
        edges = _bose_triple_system(m)
    else:
        raise UnsupportedParametersException(
            "designs are generated for (r=2, ell=1, m>=3) and (r=3, ell=1, m = 3 mod 6) only "
            "(got r={}, ell={}, m={})".format(r, ell, m))
    design = DesignHypergraph(r, ell, m, edges)
    logger.debug("design r=%d ell=%d m=%d: %d edges", r, ell, m, len(design.edges))
    return design


class TreePattern(JsonSerialize):

    def __init__(self, pattern: Pattern, r: int, n1: int, full_vertex_count: int):
        self.pattern = pattern
        self.r = r
        self.n1 = n1
        self.full_vertex_count = full_vertex_count

    @property
    def truncated(self) -> bool:
        return self.pattern.vertex_count < self.full_vertex_count

    def to_json_dict(self):
        data = self.pattern.to_json_dict()
        profile = self.pattern.profile()
        data.update({
            'n1': self.n1,
            'full_vertex_count': self.full_vertex_count,
            'root_degree': self.pattern.degrees()[0] if self.pattern.vertex_count else 0,
            'deltas': list(profile.deltas),
        })
        return data


def build_tree_pattern(r: int, n1: int, max_vertices: Optional[int] = None) -> TreePattern:
    """Root 0, first level 1..n1; every (r-1)-set S of the first level gets n1 children.

    Edges are {root} ∪ S and S ∪ {child}. With `max_vertices` the pattern is
    induced on the first `max_vertices` vertices.
    """
    if r < 2 or n1 < r - 1:
        raise DegenerateDimsException("tree pattern needs r >= 2 and n1 >= r-1 (got r={}, n1={})".format(r, n1))
    first_level = list(range(1, n1 + 1))
    edges = list()
    next_vertex = n1 + 1
    for subset in combinations(first_level, r - 1):
        edges.append((0,) + subset)
        for _ in range(n1):
            edges.append(subset + (next_vertex,))
            next_vertex += 1
    full = Pattern(next_vertex, edges, r)
    pattern = full
    if max_vertices is not None and max_vertices < next_vertex:
        pattern = full.induced(list(range(max_vertices)))
    return TreePattern(pattern, r, n1, next_vertex)


def build_block_coloring(n: int, r: int) -> ColoredHost:
    """Blocks of r+1 consecutive vertices; an edge gets the multiset of its block indices."""
    if n % (r + 1):
        raise DivisibilityException("block coloring needs r+1 = {} to divide n = {}".format(r + 1, n))
    shape = HostShape.hypergraph(n, r)
    return ColoredHost(shape, {edge: tuple(v // (r + 1) for v in edge) for edge in shape.edges()})
