from dataclasses import dataclass
from typing import Dict, Iterable, Sequence, Tuple

from .json_serialize import JsonSerialize

# Violation kinds
MONOCHROME_CHERRY = "monochromeCherry"
REPEATED_COLOR_PAIR = "repeatedColorPair"
OVERLAP_PAIR = "overlapPair"
ILLEGAL_EDGE = "illegalEdge"

# Bad-event classes
CHERRY = "cherry"
QUADRUPLE = "quadruple"
OVERLAP = "overlap"


class CanonicalEvent(JsonSerialize):
    """Ω(T, U, τ): all part-respecting injections extending τ: T -> U."""

    def __init__(self, mapping: Dict[int, int]):
        self.mapping = dict(sorted(mapping.items()))
        if len(set(self.mapping.values())) != len(self.mapping):
            raise ValueError("τ must be injective")
        self._inverse = {y: x for x, y in self.mapping.items()}

    @staticmethod
    def of_pairs(pairs: Iterable[Tuple[int, int]]) -> 'CanonicalEvent':
        return CanonicalEvent(dict(pairs))

    @property
    def domain(self) -> frozenset:
        return frozenset(self.mapping)

    @property
    def image(self) -> frozenset:
        return frozenset(self._inverse)

    def conflicts(self, other: 'CanonicalEvent') -> bool:
        for x in self.domain & other.domain:
            if self.mapping[x] != other.mapping[x]:
                return True
        for y in self.image & other.image:
            if self._inverse[y] != other._inverse[y]:
                return True
        return False

    def s_intersects(self, other: 'CanonicalEvent') -> bool:
        return bool(self.domain & other.domain) or bool(self.image & other.image)

    def occurs(self, injection: Sequence[int]) -> bool:
        return all(injection[x] == y for x, y in self.mapping.items())

    def to_json_dict(self):
        return {'tau': [[x, y] for x, y in self.mapping.items()]}

    def __eq__(self, other):
        return isinstance(other, CanonicalEvent) and self.mapping == other.mapping

    def __hash__(self):
        return hash(tuple(self.mapping.items()))

    def __repr__(self):
        return "CanonicalEvent({})".format(self.mapping)


@dataclass(frozen=True)
class BadEvent:
    """A pattern support mapped onto a host image carrying a color coincidence.

    `support` and `image` are aligned: support[i] is sent to image[i].
    Cherries are (u1, u2, u3), quadruples (u1, u2, u3, u4), overlap events list
    the vertices of e1 ∪ e2 in increasing order.
    """
    kind: str
    support: Tuple[int, ...]
    image: Tuple[int, ...]
    overlap: int = 0

    def to_canonical(self) -> CanonicalEvent:
        return CanonicalEvent(dict(zip(self.support, self.image)))

    def g_intersects(self, other: 'BadEvent') -> bool:
        return bool(set(self.support) & set(other.support))

    def k_intersects(self, other: 'BadEvent') -> bool:
        return bool(set(self.image) & set(other.image))


class Violation(JsonSerialize):
    """Witness that two pattern edges received equal colors under an embedding."""

    def __init__(self, kind: str, support: Sequence[int], pattern_edges: Sequence[Sequence[int]],
                 host_edges: Sequence[Sequence[int]], colors: Sequence[int]):
        self.kind = kind
        self.support = tuple(support)
        self.pattern_edges = tuple(tuple(edge) for edge in pattern_edges)
        self.host_edges = tuple(tuple(edge) for edge in host_edges)
        self.colors = tuple(colors)

    def key(self):
        return (self.kind, self.pattern_edges)

    def to_json_dict(self):
        return {
            'kind': self.kind,
            'support': list(self.support),
            'pattern_edges': [list(edge) for edge in self.pattern_edges],
            'host_edges': [list(edge) for edge in self.host_edges],
            'colors': list(self.colors),
        }

    def __eq__(self, other):
        return isinstance(other, Violation) and self.to_json_dict() == other.to_json_dict()

    def __hash__(self):
        return hash((self.kind, self.pattern_edges, self.host_edges))

    def __repr__(self):
        return "Violation({}, edges={}, colors={})".format(self.kind, self.pattern_edges, self.colors)
