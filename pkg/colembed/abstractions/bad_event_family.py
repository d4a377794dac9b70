from abc import ABC, abstractmethod
from collections import Counter
from math import perm
from typing import Iterator, List, Tuple

from ..exceptions import InvalidPatternException, PartOverflowException
from ..models import BadEvent, ColoredHost, Embedding, HostShape, Pattern, Violation


def check_fit(pattern: Pattern, shape: HostShape):
    """Raise unless every pattern part fits into its host part."""
    if pattern.r != shape.r:
        raise InvalidPatternException("pattern is {}-uniform, host is {}-uniform".format(pattern.r, shape.r))
    if not shape.is_multipartite:
        if pattern.vertex_count > shape.n:
            raise PartOverflowException("pattern has {} vertices, host only {}".format(pattern.vertex_count, shape.n))
        return
    if pattern.parts is None:
        raise InvalidPatternException("multipartite hosts need a partitioned pattern")
    for part, size in pattern.part_sizes().items():
        if part >= shape.m:
            raise PartOverflowException("pattern part {} has no host part (m={})".format(part, shape.m))
        if size > shape.n:
            raise PartOverflowException("pattern part {} has {} vertices, host parts have {}"
                                        .format(part, size, shape.n))


class BadEventFamilyBase(ABC):
    """Pattern-side supports of one kind of bad event, and how to find them in a host."""

    str_name = "bad events"
    mode = None

    def __init__(self, pattern: Pattern, shape: HostShape):
        check_fit(pattern, shape)
        self.pattern = pattern
        self.shape = shape

    def __str__(self):
        return self.str_name

    @abstractmethod
    def supports(self) -> List[object]:
        pass

    @abstractmethod
    def violations(self, embedding: Embedding, host: ColoredHost) -> Iterator[Violation]:
        """Violated supports under `embedding`, in the fixed scan order."""
        pass

    @abstractmethod
    def bad_events(self, host: ColoredHost) -> Iterator[BadEvent]:
        """Every (support, part-respecting image) pair whose colors coincide in `host`."""
        pass

    @abstractmethod
    def class_keys(self, event: BadEvent) -> Tuple[str, str]:
        """Names of the support-intersecting and image-intersecting classes of `event`."""
        pass

    @property
    def support_count(self) -> int:
        return len(self.supports())

    def candidate_count(self) -> int:
        """Number of (support, image) pairs a full scan of the host would visit."""
        total = 0
        for support in self.supports():
            counts = Counter(self.pattern.part_of(u) for u in support.support)
            if not self.shape.is_multipartite:
                counts = Counter({0: sum(counts.values())})
            product = 1
            for count in counts.values():
                product *= perm(self.shape.n, count)
            total += product
        return total

    def edge_colors(self, embedding: Embedding, host: ColoredHost) -> List[int]:
        images = embedding.images
        return [host.color_of([images[u] for u in edge]) for edge in self.pattern.edges]
