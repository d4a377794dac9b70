import logging
from fractions import Fraction
from math import comb, factorial
from typing import Dict, Optional, Tuple

from .abstractions import BadEventFamilyBase
from .exceptions import DegenerateDimsException, TooLargeException
from .models import BadEvent, ColoredHost, Pattern, PROPER, RAINBOW
from .models.certificate import ClassBreakdown, EventFamilySpec, LLLCertificate
from .models.events import CHERRY, OVERLAP, QUADRUPLE

logger = logging.getLogger(__name__)

THEOREMS = ("proper", "rainbow", "hyperProper", "hyperRainbow")


def falling_factorial(n: int, t: int) -> int:
    if t < 0:
        raise ValueError("negative length")
    result = 1
    for j in range(t):
        result *= n - j
    return result


def _inverse_falling(n: int, t: int) -> Fraction:
    if n - t + 1 <= 0:
        raise DegenerateDimsException("(n)_{} has a non-positive factor for n={}".format(t, n))
    return Fraction(1, falling_factorial(n, t))


def event_probability(event_class: str, n: int, r: int = 2, overlap: int = 0) -> Fraction:
    """Upper bound on P(B) for one bad event of the class under a uniform random injection.

    cherry:    1/(n^2 (n-1))
    quadruple: 1/(n^2 (n-1)^2)
    overlap:   1/(n)_{2r-i}, the 2r-i support vertices of an overlap-i edge pair
    """
    if event_class == CHERRY:
        if n - 1 <= 0:
            raise DegenerateDimsException("cherry probability needs n >= 2 (got {})".format(n))
        return Fraction(1, n * n * (n - 1))
    if event_class == QUADRUPLE:
        if n - 1 <= 0:
            raise DegenerateDimsException("quadruple probability needs n >= 2 (got {})".format(n))
        return Fraction(1, n * n * (n - 1) * (n - 1))
    if event_class == OVERLAP:
        if not 0 <= overlap <= r - 1:
            raise ValueError("overlap must lie in 0..r-1")
        return _inverse_falling(n, 2 * r - overlap)
    raise ValueError("unknown event class: {}".format(event_class))


def exact_event_probability(part_counts, n: int) -> Fraction:
    """P(B) for a canonical event fixing part_counts[i] vertices in part i: Π 1/(n)_{c_i}."""
    result = Fraction(1)
    for count in part_counts:
        result *= _inverse_falling(n, count)
    return result


def _hyper_weight(r: int, overlap: int) -> int:
    # 2r vertex choices for each of the two intersection kinds, C(r, i) apex sets,
    # (r-i)! orderings of the second edge's image
    return 4 * r * comb(r, overlap) * factorial(r - overlap)


def hyper_constants(r: int, ell: int, config=None) -> Tuple[Fraction, Fraction]:
    """(c1, c2) for k <= c·n^(r-ell)/(Δ1·Δell) in the hypergraph theorems.

    Contribution of class i is at most _hyper_weight(r, i)·n^r·Δ1·Δi·k/(n)_{2r-i}.
    With Δi <= n^(ell-i)·Δell and n^t/(n)_t <= 2 (valid for n >= 2r(2r-1)) this is
    at most 2·_hyper_weight(r, i)·c, so the sum stays <= 1/4 when
    c1 = 1/(8·Σ_{i=1..ell} weight) and c2 adds the overlap-0 weight.
    """
    proper_weight = sum(_hyper_weight(r, i) for i in range(1, ell + 1))
    c1 = Fraction(1, 8 * proper_weight)
    c2 = Fraction(1, 8 * (proper_weight + _hyper_weight(r, 0)))
    if config is not None:
        if config.hyper_c1 is not None:
            c1 = Fraction(config.hyper_c1)
        if config.hyper_c2 is not None:
            c2 = Fraction(config.hyper_c2)
    return c1, c2


def hyper_valid_from(r: int) -> int:
    return 2 * r * (2 * r - 1)


def _graph_delta(spec: EventFamilySpec) -> int:
    if spec.delta < 0:
        raise DegenerateDimsException("negative maximum degree")
    return spec.delta


def _hyper_deltas(spec: EventFamilySpec) -> Dict[int, int]:
    """Δ_i for i = 0..ell, unknown entries filled by the cascade Δ_i <= n^(ell-i)·Δell."""
    n, ell = spec.n, spec.ell
    delta_ell = spec.deltas[ell]
    known = dict()
    for i in range(ell + 1):
        given = spec.deltas[i] if i < len(spec.deltas) else None
        known[i] = given if given is not None else n ** (ell - i) * delta_ell
    return known


def intersection_count_bounds(spec: EventFamilySpec) -> Dict[str, Fraction]:
    """Closed-form bounds on the number of bad events intersecting a fixed one, per class.

    Graph hosts: I_G, I_K count cherries sharing a pattern / host vertex with B,
    J_G, J_K count quadruples (rainbow only). Hypergraph hosts: I_G[i], I_K[i]
    count overlap-i pairs.
    """
    n, k = spec.n, spec.k
    if not spec.is_hypergraph:
        delta = _graph_delta(spec)
        if spec.mode == PROPER:
            cherry = Fraction(9, 2) * delta * (delta - 1) * n * n * k
            return {'I_G': cherry, 'I_K': cherry}
        cherry = Fraction(6) * delta * (delta - 1) * n * n * k
        quadruple = Fraction(4) * delta * delta * n ** 3 * k
        return {'I_G': cherry, 'I_K': cherry, 'J_G': quadruple, 'J_K': quadruple}
    r = spec.r
    deltas = _hyper_deltas(spec)
    overlaps = range(1, spec.ell + 1) if spec.mode == PROPER else range(0, spec.ell + 1)
    bounds = dict()
    for i in overlaps:
        count = Fraction(_hyper_weight(r, i), 2) * n ** r * deltas[1] * deltas[i] * k
        bounds['I_G[{}]'.format(i)] = count
        bounds['I_K[{}]'.format(i)] = count
    return bounds


def _class_probability(spec: EventFamilySpec, name: str) -> Fraction:
    if not spec.is_hypergraph:
        return event_probability(QUADRUPLE if name.startswith('J') else CHERRY, spec.n)
    overlap = int(name[name.index('[') + 1:-1])
    return event_probability(OVERLAP, spec.n, spec.r, overlap)


def certify(spec: EventFamilySpec, config=None) -> LLLCertificate:
    """Asymmetric lopsided local lemma check over the closed-form class counts.

    The certificate passes iff every event has probability <= 1/4 and the
    probabilities of the events intersecting any one event sum to <= 1/4.
    """
    n = spec.n
    if not spec.is_hypergraph:
        minimum = 4 if spec.mode == PROPER else 5
        if n < minimum:
            raise DegenerateDimsException("{} certificates need n >= {} (got {})".format(spec.mode, minimum, n))
    elif n < 2 * spec.r:
        raise DegenerateDimsException("hypergraph certificates need n >= 2r (got n={}, r={})".format(n, spec.r))
    bounds = intersection_count_bounds(spec)
    breakdown = [ClassBreakdown(name, count, _class_probability(spec, name)) for name, count in bounds.items()]
    per_event = max(item.probability for item in breakdown)
    valid_from = hyper_valid_from(spec.r) if spec.is_hypergraph else None
    warnings = list()
    if valid_from is not None and n < valid_from:
        warnings.append("n={} is below 2r(2r-1) = {}; the counting constants are not proven there"
                        .format(n, valid_from))
        logger.warning("hypergraph certificate outside the proven range: n=%d < %d", n, valid_from)
    certificate = LLLCertificate(spec, per_event, breakdown, _certificate_threshold(spec, config),
                                 relaxed_sum_bound=_relaxed_bound(spec), valid_from_n=valid_from,
                                 warnings=warnings)
    logger.info("certificate %s n=%d k=%d: sum=%s passes=%s", spec.mode, n, spec.k,
                certificate.neighborhood_sum_bound, certificate.passes)
    return certificate


def _relaxed_bound(spec: EventFamilySpec) -> Optional[Fraction]:
    """The simplified bounds 12Δ²k/n (proper) and 27.5Δ²k/n (rainbow), graph hosts only."""
    if spec.is_hypergraph:
        return None
    factor = Fraction(12) if spec.mode == PROPER else Fraction(55, 2)
    return factor * spec.delta * spec.delta * spec.k / spec.n


def _certificate_threshold(spec: EventFamilySpec, config) -> Optional[int]:
    try:
        if spec.is_hypergraph:
            theorem = "hyperProper" if spec.mode == PROPER else "hyperRainbow"
            return threshold_k(theorem, spec.n, r=spec.r, ell=spec.ell,
                               delta1=spec.deltas[1], delta_ell=spec.deltas[spec.ell], config=config)
        return threshold_k(spec.mode, spec.n, delta=spec.delta)
    except DegenerateDimsException:
        # No bad events at all: every k is admissible
        return None


def threshold_k(theorem: str, n: int, delta: Optional[int] = None, r: Optional[int] = None,
                ell: Optional[int] = None, delta1: Optional[int] = None, delta_ell: Optional[int] = None,
                config=None) -> int:
    """Largest k covered by the theorem: n/(48Δ²), n/(110Δ²) or c·n^(r-ell)/(Δ1·Δell), floored."""
    if theorem in (PROPER, RAINBOW):
        if delta is None or delta < 1:
            raise DegenerateDimsException("graph thresholds need Δ >= 1")
        divisor = 48 if theorem == PROPER else 110
        return n // (divisor * delta * delta)
    if theorem not in THEOREMS:
        raise ValueError("unknown theorem: {}".format(theorem))
    if r is None or ell is None or not 1 <= ell <= r - 1:
        raise DegenerateDimsException("hypergraph thresholds need r and 1 <= ell <= r-1")
    if delta1 is None or delta_ell is None or delta1 < 1 or delta_ell < 1:
        raise DegenerateDimsException("hypergraph thresholds need Δ1, Δell >= 1")
    c1, c2 = hyper_constants(r, ell, config)
    constant = c1 if theorem == "hyperProper" else c2
    value = constant * n ** (r - ell) / (delta1 * delta_ell)
    return value.numerator // value.denominator


def spec_for(pattern: Pattern, host: ColoredHost, mode: str, k: int, ell: Optional[int] = None,
             bound_type: Optional[str] = None) -> EventFamilySpec:
    """EventFamilySpec with the degrees measured on a concrete pattern."""
    shape = host.shape
    profile = pattern.profile()
    if pattern.is_graph and shape.is_multipartite:
        return EventFamilySpec.for_graph(mode, shape.n, profile.max_degree, k, shape.m, bound_type)
    if ell is None:
        ell = pattern.r - 1
    return EventFamilySpec.for_hypergraph(mode, shape.n, pattern.r, ell, profile.deltas[:ell + 1], k, bound_type)


def enumerate_intersecting_exact(event: BadEvent, family: BadEventFamilyBase, host: ColoredHost,
                                 limit: int = 10 ** 7) -> Dict[str, int]:
    """Exact numbers of bad events B' != B sharing a pattern vertex (…_G) or a host vertex (…_K) with B."""
    candidates = family.candidate_count()
    if candidates > limit:
        raise TooLargeException("intersecting-event enumeration", candidates, limit)
    counts = dict()
    for other in family.bad_events(host):
        g_key, k_key = family.class_keys(other)
        counts.setdefault(g_key, 0)
        counts.setdefault(k_key, 0)
        if other == event:
            continue
        if other.g_intersects(event):
            counts[g_key] += 1
        if other.k_intersects(event):
            counts[k_key] += 1
    return counts
