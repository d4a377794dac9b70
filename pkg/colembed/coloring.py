import logging
from collections import Counter
from typing import Dict, Iterator, List, Sequence

import numpy as np

from .exceptions import InvalidShapeException, NotLatinException
from .models import BoundednessReport, ColoredHost, HostShape
from .models.certificate import GLOBAL, LOCAL
from .seeding import SeedLike, make_rng

logger = logging.getLogger(__name__)


def build_host(shape: HostShape) -> Iterator[tuple]:
    shape.validate()
    return shape.edges()


def measure_boundedness(host: ColoredHost) -> BoundednessReport:
    """Smallest k for which the coloring is locally / globally k-bounded.

    The local count is the largest number of edges of one color at one vertex,
    which for hypergraphs is the maximum degree of a color class.
    """
    incidences = Counter()
    for edge, color in zip(host.edges, host.colors):
        for v in edge:
            incidences[(v, color)] += 1
    sizes = host.class_sizes()
    return BoundednessReport(max(incidences.values(), default=0), max(sizes, default=0), sizes)


def latin_square_to_coloring(square: Sequence[Sequence[object]]) -> ColoredHost:
    """Rows become part 0, columns part 1, cell (i, j) colors the edge {i, n + j}."""
    check_latin(square)
    n = len(square)
    shape = HostShape.multipartite(2, n)
    coloring = {(i, n + j): square[i][j] for i in range(n) for j in range(n)}
    return ColoredHost(shape, coloring)


def coloring_to_latin_square(host: ColoredHost) -> List[List[object]]:
    shape = host.shape
    if not shape.is_multipartite or shape.m != 2:
        raise InvalidShapeException("only K_(n,n) colorings correspond to Latin squares")
    n = shape.n
    square = [[host.label_of(host.color_of_pair(i, n + j)) for j in range(n)] for i in range(n)]
    check_latin(square)
    return square


def check_latin(square: Sequence[Sequence[object]]):
    n = len(square)
    if n == 0:
        raise NotLatinException("empty square")
    if any(len(row) != n for row in square):
        raise NotLatinException("square is not n x n")
    symbols = set(square[0])
    if len(symbols) != n:
        raise NotLatinException("row 0 repeats a symbol")
    for i, row in enumerate(square):
        if set(row) != symbols:
            raise NotLatinException("row {} is not a permutation of the symbols".format(i))
    for j in range(n):
        if {square[i][j] for i in range(n)} != symbols:
            raise NotLatinException("column {} is not a permutation of the symbols".format(j))


def cyclic_latin_square(n: int) -> List[List[int]]:
    """Addition table of Z_n."""
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def read_latin_csv(path: str) -> List[List[object]]:
    cells = np.loadtxt(path, dtype=str, delimiter=",", ndmin=2)
    return [[_parse_symbol(cell.strip()) for cell in row] for row in cells]


def write_latin_csv(square: Sequence[Sequence[object]], path):
    np.savetxt(path, np.array(square, dtype=str), fmt="%s", delimiter=",")


def _parse_symbol(cell: str):
    try:
        return int(cell)
    except ValueError:
        return cell


def random_bounded_coloring(shape: HostShape, target_k: int, mode: str = GLOBAL, seed: SeedLike = None,
                            probes: int = 8) -> ColoredHost:
    """Seeded random coloring that is locally or globally target_k-bounded.

    Global mode chunks a random edge permutation into blocks of target_k edges.
    Local mode walks the same permutation and reuses a color whenever every
    vertex of the edge has fewer than target_k edges of it, trying the most
    recent color and then `probes` random earlier ones before opening a new one.
    """
    if target_k < 1:
        raise ValueError("target k must be >= 1")
    if mode not in (LOCAL, GLOBAL):
        raise ValueError("bound mode must be local or global")
    rng = make_rng(seed)
    edges = list(build_host(shape))
    order = rng.permutation(len(edges))
    if mode == GLOBAL:
        coloring = {edges[index]: position // target_k for position, index in enumerate(order)}
    else:
        coloring = _greedy_local_coloring([edges[index] for index in order], target_k, rng, probes)
    host = ColoredHost(shape, coloring)
    logger.debug("random %s coloring of %s with k=%d uses %d colors", mode, shape, target_k, host.num_colors)
    return host


def _greedy_local_coloring(edges: List[tuple], target_k: int, rng: np.random.Generator,
                           probes: int) -> Dict[tuple, int]:
    incidences = Counter()
    coloring = dict()
    color_count = 0
    for edge in edges:
        candidates = list()
        if color_count:
            candidates.append(color_count - 1)
            candidates.extend(int(c) for c in rng.integers(0, color_count, size=min(probes, color_count)))
        chosen = None
        for color in candidates:
            if all(incidences[(v, color)] < target_k for v in edge):
                chosen = color
                break
        if chosen is None:
            chosen = color_count
            color_count += 1
        for v in edge:
            incidences[(v, chosen)] += 1
        coloring[edge] = chosen
    return coloring
