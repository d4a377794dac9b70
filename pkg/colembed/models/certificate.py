from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .embedding import PROPER, RAINBOW
from .host import HYPERGRAPH, MULTIPARTITE
from .json_serialize import JsonSerialize, rational_str

LOCAL = "local"
GLOBAL = "global"

QUARTER = Fraction(1, 4)


class EventFamilySpec(JsonSerialize):
    """Hypotheses of one embedding theorem: mode, host dims, pattern degrees, bound k.

    Graph hosts use `delta`; hypergraph hosts use `deltas` (Δ_0..Δ_ℓ, entries may
    be None when unknown) together with `ell`.
    """

    def __init__(self, mode: str, host_kind: str, n: int, k: int, bound_type: Optional[str] = None,
                 m: int = 2, r: int = 2, delta: Optional[int] = None, ell: Optional[int] = None,
                 deltas: Optional[Sequence[Optional[int]]] = None):
        if mode not in (PROPER, RAINBOW):
            raise ValueError("mode must be proper or rainbow")
        if host_kind not in (MULTIPARTITE, HYPERGRAPH):
            raise ValueError("host kind must be multipartite or hypergraph")
        if bound_type is None:
            bound_type = LOCAL if mode == PROPER else GLOBAL
        if mode == RAINBOW and bound_type != GLOBAL:
            raise ValueError("rainbow certificates need a globally bounded coloring")
        if k < 1:
            raise ValueError("k must be >= 1")
        self.mode = mode
        self.host_kind = host_kind
        self.n = n
        self.m = m
        self.r = r
        self.k = k
        self.bound_type = bound_type
        self.delta = delta
        self.ell = ell
        self.deltas = None if deltas is None else tuple(deltas)
        if host_kind == MULTIPARTITE and delta is None:
            raise ValueError("graph certificates need the maximum degree delta")
        if host_kind == HYPERGRAPH:
            if ell is None or not 1 <= ell <= r - 1:
                raise ValueError("hypergraph certificates need 1 <= ell <= r-1")
            if self.deltas is None or len(self.deltas) <= ell or self.deltas[1] is None or self.deltas[ell] is None:
                raise ValueError("hypergraph certificates need Δ_1 and Δ_ell")

    @property
    def is_hypergraph(self) -> bool:
        return self.host_kind == HYPERGRAPH

    def with_k(self, k: int) -> 'EventFamilySpec':
        return EventFamilySpec(self.mode, self.host_kind, self.n, k, self.bound_type, self.m, self.r,
                               self.delta, self.ell, self.deltas)

    @staticmethod
    def for_graph(mode: str, n: int, delta: int, k: int, m: int = 2, bound_type: Optional[str] = None):
        return EventFamilySpec(mode, MULTIPARTITE, n, k, bound_type, m=m, delta=delta)

    @staticmethod
    def for_hypergraph(mode: str, n: int, r: int, ell: int, deltas: Sequence[Optional[int]], k: int,
                       bound_type: Optional[str] = None):
        return EventFamilySpec(mode, HYPERGRAPH, n, k, bound_type, m=1, r=r, ell=ell, deltas=deltas)

    def to_json_dict(self):
        data = {
            'mode': self.mode, 'host_kind': self.host_kind, 'n': self.n, 'k': self.k,
            'bound_type': self.bound_type,
        }
        if self.is_hypergraph:
            data.update({'r': self.r, 'ell': self.ell, 'deltas': list(self.deltas)})
        else:
            data.update({'m': self.m, 'delta': self.delta})
        return data


class ClassBreakdown(JsonSerialize):
    """One intersecting-event class: count bound, per-event probability, product."""

    def __init__(self, name: str, count_bound: Fraction, probability: Fraction):
        self.name = name
        self.count_bound = Fraction(count_bound)
        self.probability = Fraction(probability)

    @property
    def contribution(self) -> Fraction:
        return self.count_bound * self.probability

    def to_json_dict(self):
        return {
            'class': self.name,
            'count_bound': rational_str(self.count_bound),
            'probability': rational_str(self.probability),
            'contribution': rational_str(self.contribution),
        }


class LLLCertificate(JsonSerialize):

    def __init__(self, spec: EventFamilySpec, per_event_prob_bound: Fraction, breakdown: List[ClassBreakdown],
                 threshold_k: int, relaxed_sum_bound: Optional[Fraction] = None, valid_from_n: Optional[int] = None,
                 warnings: Optional[List[str]] = None):
        self.spec = spec
        self.per_event_prob_bound = Fraction(per_event_prob_bound)
        self.breakdown = breakdown
        self.neighborhood_sum_bound = sum((item.contribution for item in breakdown), Fraction(0))
        self.threshold_k = threshold_k
        self.relaxed_sum_bound = relaxed_sum_bound
        self.valid_from_n = valid_from_n
        self.warnings = list(warnings or [])
        self.passes = self.per_event_prob_bound <= QUARTER and self.neighborhood_sum_bound <= QUARTER

    def classes(self) -> Dict[str, ClassBreakdown]:
        return {item.name: item for item in self.breakdown}

    def to_json_dict(self):
        data = {
            'spec': self.spec.to_json_dict(),
            'passes': self.passes,
            'per_event_prob_bound': rational_str(self.per_event_prob_bound),
            'neighborhood_sum_bound': rational_str(self.neighborhood_sum_bound),
            'threshold_k': self.threshold_k,
            'breakdown': [item.to_json_dict() for item in self.breakdown],
        }
        if self.relaxed_sum_bound is not None:
            data['relaxed_sum_bound'] = rational_str(self.relaxed_sum_bound)
        if self.valid_from_n is not None:
            data['valid_from_n'] = self.valid_from_n
        if self.warnings:
            data['warnings'] = list(self.warnings)
        return data


class NegativeDependencyViolation(JsonSerialize):

    def __init__(self, event_index: int, conditioning: Sequence[int], conditional: Fraction, unconditional: Fraction):
        self.event_index = event_index
        self.conditioning = tuple(conditioning)
        self.conditional = conditional
        self.unconditional = unconditional

    def to_json_dict(self):
        return {
            'event': self.event_index,
            'conditioning': list(self.conditioning),
            'conditional': rational_str(self.conditional),
            'unconditional': rational_str(self.unconditional),
        }


class NegativeDependencyReport(JsonSerialize):

    def __init__(self, injection_count: int, event_count: int, graph: str):
        self.injection_count = injection_count
        self.event_count = event_count
        self.graph = graph
        self.checks = 0
        self.exhaustive_checks = 0
        self.sampled_checks = 0
        self.null_conditionings = 0
        self.violations = list()

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_dict(self):
        return {
            'injection_count': self.injection_count,
            'event_count': self.event_count,
            'graph': self.graph,
            'checks': self.checks,
            'exhaustive_checks': self.exhaustive_checks,
            'sampled_checks': self.sampled_checks,
            'null_conditionings': self.null_conditionings,
            'ok': self.ok,
            'violations': [violation.to_json_dict() for violation in self.violations],
        }
