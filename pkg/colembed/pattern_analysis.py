from collections import Counter
from itertools import combinations
from typing import Dict, Iterator, List, Optional

import networkx as nx

from .exceptions import InvalidPatternException
from .models import DegreeProfile, EdgePair, Pattern, PatternCherry, PatternQuadruple


def degree_profile(pattern: Pattern) -> DegreeProfile:
    return pattern.profile()


def _require_graph(pattern: Pattern):
    if not pattern.is_graph:
        raise InvalidPatternException("operation needs a 2-uniform pattern (got r={})".format(pattern.r))


def enumerate_cherries(pattern: Pattern) -> List[PatternCherry]:
    """Every path u1-u2-u3 once, apex u2, leaves u1 < u3."""
    _require_graph(pattern)
    cherries = list()
    for apex, neighbors in enumerate(pattern.neighbors()):
        for u1, u3 in combinations(neighbors, 2):
            cherries.append(PatternCherry(u1, apex, u3))
    return cherries


def enumerate_quadruples(pattern: Pattern) -> List[PatternQuadruple]:
    _require_graph(pattern)
    quadruples = list()
    for (a1, a2), (b1, b2) in combinations(pattern.edges, 2):
        if len({a1, a2, b1, b2}) == 4:
            quadruples.append(PatternQuadruple(a1, a2, b1, b2))
    return quadruples


def enumerate_overlap_pairs(pattern: Pattern, overlap: int) -> List[EdgePair]:
    if not 0 <= overlap <= pattern.r - 1:
        raise InvalidPatternException("overlap must lie in 0..{}".format(pattern.r - 1))
    pairs = list()
    for e1, e2 in combinations(pattern.edges, 2):
        if len(set(e1) & set(e2)) == overlap:
            pairs.append(EdgePair(e1, e2, overlap))
    return pairs


def check_linearity(pattern: Pattern, ell: int) -> bool:
    """True iff every (ell+1)-set lies in at most one edge, i.e. Δ_{ell+1} <= 1."""
    if not 1 <= ell <= pattern.r - 1:
        raise InvalidPatternException("ell must lie in 1..{}".format(pattern.r - 1))
    return pattern.profile().delta(ell + 1) <= 1


def _in_vertex_order(graph: nx.Graph, colors) -> Iterator[int]:
    return iter(sorted(graph))


def _balance(graph: nx.Graph, coloring: Dict[int, int], part_count: int):
    """Move vertices to strictly smaller parts that hold none of their neighbors, until none can move."""
    sizes = Counter({part: 0 for part in range(part_count)})
    sizes.update(coloring.values())
    moved = True
    while moved:
        moved = False
        for u in sorted(graph):
            blocked = {coloring[w] for w in graph[u]}
            target = min((p for p in range(part_count) if p not in blocked), key=lambda p: (sizes[p], p))
            if sizes[target] + 1 < sizes[coloring[u]]:
                sizes[coloring[u]] -= 1
                sizes[target] += 1
                coloring[u] = target
                moved = True


def greedy_partition(pattern: Pattern, m: Optional[int] = None) -> Pattern:
    """Split the vertices into independent parts of near-equal size.

    When m exceeds the maximum degree an equitable m-coloring exists and is used
    directly (part sizes differ by at most one). Otherwise vertices are colored
    greedily in order and then rebalanced; with `m` given at most m parts are allowed.
    """
    _require_graph(pattern)
    if pattern.vertex_count == 0:
        return pattern.with_parts([])
    graph = pattern.to_networkx()
    if m is not None and max(pattern.degrees()) < m:
        coloring = nx.equitable_color(graph, m)
    else:
        coloring = nx.greedy_color(graph, strategy=_in_vertex_order)
        part_count = 1 + max(coloring.values())
        if m is not None and part_count > m:
            raise InvalidPatternException("greedy coloring needs {} parts, more than m = {}".format(part_count, m))
        _balance(graph, coloring, m or part_count)
    return pattern.with_parts([coloring[u] for u in range(pattern.vertex_count)])


def overlapping_cycle(n: int, r: int, ell: int) -> Pattern:
    """C_n^(r)(ell): edges {j(r-ell), .., j(r-ell)+r-1} mod n; consecutive edges share ell vertices."""
    if not 1 <= ell <= r - 1:
        raise InvalidPatternException("ell must lie in 1..{}".format(r - 1))
    step = r - ell
    if n % step:
        raise InvalidPatternException("(r - ell) = {} must divide n = {}".format(step, n))
    edge_count = n // step
    if edge_count < 3 or n <= r:
        raise InvalidPatternException("C_{}^({})({}) is degenerate".format(n, r, ell))
    edges = [[(j * step + t) % n for t in range(r)] for j in range(edge_count)]
    return Pattern(n, edges, r)


def fano_pattern() -> Pattern:
    """PG(2, 2) as a 3-graph, lines {i, i+1, i+3} mod 7."""
    return Pattern(7, [[i, (i + 1) % 7, (i + 3) % 7] for i in range(7)], 3)


def from_graph(graph: nx.Graph, m: Optional[int] = None) -> Pattern:
    pattern = Pattern.from_networkx(graph)
    if pattern.parts is None:
        pattern = greedy_partition(pattern, m)
    return pattern


def path_pattern(vertex_count: int) -> Pattern:
    return from_graph(nx.path_graph(vertex_count))


def cycle_pattern(vertex_count: int) -> Pattern:
    return from_graph(nx.cycle_graph(vertex_count))


def star_pattern(leaves: int) -> Pattern:
    return from_graph(nx.star_graph(leaves))


def complete_pattern(vertex_count: int) -> Pattern:
    return from_graph(nx.complete_graph(vertex_count))


def matching_pattern(edge_count: int) -> Pattern:
    """Disjoint edges (2i, 2i+1), even vertices in part 0 and odd ones in part 1."""
    graph = nx.Graph()
    graph.add_edges_from((2 * i, 2 * i + 1) for i in range(edge_count))
    return Pattern.from_networkx(graph, [u % 2 for u in range(2 * edge_count)])


def bipartite_hamilton_cycle(part_size: int) -> Pattern:
    """Cycle through 2·part_size vertices alternating between parts 0 and 1."""
    if part_size < 2:
        raise InvalidPatternException("a bipartite Hamilton cycle needs part size >= 2")
    graph = nx.cycle_graph(2 * part_size)
    return Pattern.from_networkx(graph, [u % 2 for u in range(2 * part_size)])


def random_pattern(vertex_count: int, edge_probability: float, seed: int, m: Optional[int] = None) -> Pattern:
    return from_graph(nx.gnp_random_graph(vertex_count, edge_probability, seed=seed), m)

