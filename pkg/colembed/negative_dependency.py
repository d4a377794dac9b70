import logging
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import List, Optional, Sequence

from .exceptions import ConditioningOnNullException, InvalidPatternException, TooLargeException
from .models import CanonicalEvent, NegativeDependencyReport
from .models.certificate import NegativeDependencyViolation
from .seeding import SeedLike, make_rng

logger = logging.getLogger(__name__)

CONFLICT = "conflict"
S_INTERSECT = "s-intersect"
GRAPHS = (CONFLICT, S_INTERSECT)


def conflicts(first: CanonicalEvent, second: CanonicalEvent) -> bool:
    return first.conflicts(second)


def s_intersect(first: CanonicalEvent, second: CanonicalEvent) -> bool:
    return first.s_intersects(second)


class InjectionSpace:
    """All part-respecting injections X -> Y; both sides numbered part-major."""

    def __init__(self, x_sizes: Sequence[int], y_sizes: Sequence[int]):
        if len(x_sizes) != len(y_sizes):
            raise InvalidPatternException("X and Y need the same number of parts")
        for x_size, y_size in zip(x_sizes, y_sizes):
            if x_size > y_size:
                raise InvalidPatternException("part with {} points cannot inject into {}".format(x_size, y_size))
        self.x_sizes = tuple(x_sizes)
        self.y_sizes = tuple(y_sizes)
        self.x_offsets = _offsets(x_sizes)
        self.y_offsets = _offsets(y_sizes)

    @property
    def size(self) -> int:
        total = 1
        for x_size, y_size in zip(self.x_sizes, self.y_sizes):
            for j in range(x_size):
                total *= y_size - j
        return total

    def x_part(self, x: int) -> int:
        return _part(self.x_offsets, x)

    def y_part(self, y: int) -> int:
        return _part(self.y_offsets, y)

    def injections(self):
        """Yields tuples sigma with sigma[x] the image of x."""
        per_part = [
            list(permutations(range(offset, offset + y_size), x_size))
            for offset, x_size, y_size in zip(self.y_offsets, self.x_sizes, self.y_sizes)
        ]
        for choice in product(*per_part):
            yield tuple(y for part in choice for y in part)

    def check_event(self, event: CanonicalEvent):
        for x, y in event.mapping.items():
            if not 0 <= x < sum(self.x_sizes) or not 0 <= y < sum(self.y_sizes):
                raise InvalidPatternException("event {} leaves the space".format(event))
            if self.x_part(x) != self.y_part(y):
                raise InvalidPatternException("event {} is not part-respecting".format(event))

    def single_pair_events(self) -> List[CanonicalEvent]:
        events = list()
        for part in range(len(self.x_sizes)):
            for x in range(self.x_offsets[part], self.x_offsets[part] + self.x_sizes[part]):
                for y in range(self.y_offsets[part], self.y_offsets[part] + self.y_sizes[part]):
                    events.append(CanonicalEvent({x: y}))
        return events


def _offsets(sizes: Sequence[int]) -> List[int]:
    offsets = list()
    total = 0
    for size in sizes:
        offsets.append(total)
        total += size
    return offsets


def _part(offsets: List[int], point: int) -> int:
    part = 0
    for i, offset in enumerate(offsets):
        if point >= offset:
            part = i
    return part


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def verify_negative_dependency(x_sizes: Sequence[int], y_sizes: Sequence[int], events: Sequence[CanonicalEvent],
                               graph: str = CONFLICT, config=None, seed: SeedLike = None,
                               injection_limit: Optional[int] = None) -> NegativeDependencyReport:
    """Check P(B_i | none of B_J) <= P(B_i) for every i and J among the non-neighbours of i.

    Subsets J up to the exhaustive size are all checked; larger ones are sampled.
    A J whose events cover the whole space has nothing to condition on and is
    only counted.
    """
    if graph not in GRAPHS:
        raise ValueError("graph must be one of {}".format(GRAPHS))
    exhaustive_size = config.negdep_exhaustive_subset_size if config is not None else 4
    sampled = config.negdep_sampled_subsets if config is not None else 1000
    if injection_limit is None:
        injection_limit = config.negdep_injection_limit if config is not None else 10 ** 6

    space = InjectionSpace(x_sizes, y_sizes)
    if space.size > injection_limit:
        raise TooLargeException("injection space", space.size, injection_limit)
    for event in events:
        space.check_event(event)

    masks = [0] * len(events)
    total = 0
    for bit, sigma in enumerate(space.injections()):
        for i, event in enumerate(events):
            if event.occurs(sigma):
                masks[i] |= 1 << bit
        total += 1
    everything = (1 << total) - 1

    adjacent = conflicts if graph == CONFLICT else s_intersect
    rng = make_rng(seed)
    report = NegativeDependencyReport(total, len(events), graph)
    for i, event in enumerate(events):
        candidates = [j for j in range(len(events)) if j != i and not adjacent(event, events[j])]
        for size in range(min(exhaustive_size, len(candidates)) + 1):
            for subset in combinations(candidates, size):
                _check(report, i, subset, masks, everything, total)
                report.exhaustive_checks += 1
        if len(candidates) > exhaustive_size:
            for _ in range(sampled):
                size = int(rng.integers(exhaustive_size + 1, len(candidates) + 1))
                subset = sorted(int(j) for j in rng.choice(candidates, size=size, replace=False))
                _check(report, i, subset, masks, everything, total)
                report.sampled_checks += 1
    logger.info("negative dependency: %d checks, %d violations, %d null conditionings",
                report.checks, len(report.violations), report.null_conditionings)
    return report


def conditional_probability(event_mask: int, avoided_masks: Sequence[int], everything: int) -> Fraction:
    """P(B | none of the avoided events) over the injections encoded as bits of `everything`."""
    avoided = everything
    for mask in avoided_masks:
        avoided &= ~mask
    avoided_count = _popcount(avoided)
    if avoided_count == 0:
        raise ConditioningOnNullException("the conditioning events cover every injection")
    return Fraction(_popcount(event_mask & avoided), avoided_count)


def _check(report: NegativeDependencyReport, i: int, subset, masks: List[int], everything: int, total: int):
    report.checks += 1
    try:
        conditional = conditional_probability(masks[i], [masks[j] for j in subset], everything)
    except ConditioningOnNullException:
        report.null_conditionings += 1
        return
    unconditional = Fraction(_popcount(masks[i]), total)
    if conditional > unconditional:
        report.violations.append(NegativeDependencyViolation(i, subset, conditional, unconditional))
