import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence

import numpy as np

from .abstractions import BadEventFamilyBase, RunObserverBase, check_fit
from .budget import ResampleBudget, ResampleBudgetExhaustedException
from .families import family_for
from .models import ColoredHost, EmbedConfig, EmbedReport, Embedding, Pattern, Violation
from .models.embedding import RANDOM
from .search import find_colored_copy
from .seeding import SeedLike, make_rng, resolve_seed, spawn_rngs

logger = logging.getLogger(__name__)


def sample_injection(pattern: Pattern, host: ColoredHost, seed: SeedLike = None) -> Embedding:
    """Uniform part-respecting injection: an independent uniform injection per part."""
    check_fit(pattern, host.shape)
    rng = make_rng(seed)
    shape = host.shape
    images = [0] * pattern.vertex_count
    members = pattern.part_members() if shape.is_multipartite else {0: list(range(pattern.vertex_count))}
    for part in sorted(members):
        vertices = np.asarray(shape.part_vertices(part))
        chosen = rng.choice(vertices, size=len(members[part]), replace=False)
        for u, v in zip(members[part], chosen):
            images[u] = int(v)
    return Embedding(images)


def find_violation(embedding: Embedding, family: BadEventFamilyBase, host: ColoredHost,
                   scan_order: str = "firstFound", seed: SeedLike = None) -> Optional[Violation]:
    """A violated bad event of `family` under `embedding`, or None if the copy is good.

    firstFound returns the first violation in the family's fixed scan order;
    random collects every violation and picks one uniformly.
    """
    if scan_order != RANDOM:
        return next(iter(family.violations(embedding, host)), None)
    found = list(family.violations(embedding, host))
    if not found:
        return None
    return found[int(make_rng(seed).integers(len(found)))]


def resample(embedding: Embedding, violation: Violation, pattern: Pattern, host: ColoredHost,
             seed: SeedLike = None) -> Embedding:
    """Re-randomize the violation's support in place by swaps within each part."""
    rng = make_rng(seed)
    shape = host.shape
    for u in violation.support:
        part = shape.part_vertices(pattern.part_of(u) if shape.is_multipartite else 0)
        w = part.start + int(rng.integers(len(part)))
        embedding.assign(u, w)
    return embedding


class _RestartOutcome:

    def __init__(self, index: int):
        self.index = index
        self.success = False
        self.embedding = None
        self.resamples = 0
        self.last_violation = None
        self.transcript = list()


class Embedder:
    """Sample, then resample violated supports until none is left or the budget runs out."""

    def __init__(self, pattern: Pattern, host: ColoredHost, embed_config: EmbedConfig, config=None,
                 observers: Optional[Sequence[RunObserverBase]] = None):
        self.pattern = pattern
        self.host = host
        self.embed_config = embed_config
        self.config = config
        self.family = family_for(pattern, host.shape, embed_config.mode)
        factor = config.max_resamples_factor if config is not None else 100
        self.max_resamples = embed_config.max_resamples or max(1, factor * self.family.support_count)
        self.observers = [observer for observer in (observers or []) if observer.enabled()]
        self.record = embed_config.record_transcript or any(o.wants_transcript for o in self.observers)

    def run(self, seed: Optional[int] = None) -> EmbedReport:
        """One seeded run; `seed` overrides the configured one."""
        seed = resolve_seed(self.embed_config.seed if seed is None else seed, self.config)
        rngs = spawn_rngs(seed, self.embed_config.restarts)
        if self.embed_config.parallel:
            with ThreadPoolExecutor() as executor:
                outcomes = list(executor.map(self._run_restart, range(len(rngs)), rngs))
        else:
            outcomes = list()
            for index, rng in enumerate(rngs):
                outcomes.append(self._run_restart(index, rng))
                if outcomes[-1].success:
                    break
        report = self._report(seed, outcomes)
        for observer in self.observers:
            try:
                observer.update(report)
            except Exception as e:
                logger.warning("observer %s failed: %s", observer, e)
        return report

    def _report(self, seed: int, outcomes: List[_RestartOutcome]) -> EmbedReport:
        # Lowest successful restart wins, so parallel and sequential runs agree
        winner = next((outcome for outcome in outcomes if outcome.success), None)
        counted = outcomes if winner is None else outcomes[:winner.index + 1]
        transcript = [line for outcome in counted for line in outcome.transcript]
        last = counted[-1]
        report = EmbedReport(self.embed_config.mode, seed, winner is not None,
                             None if winner is None else winner.embedding,
                             sum(outcome.resamples for outcome in counted), len(counted),
                             last.last_violation, None if winner is None else winner.index,
                             self.max_resamples, transcript)
        logger.info("embed %s: success=%s restarts=%d resamples=%d", report.mode, report.success,
                    report.restarts, report.resamples)
        return report

    def _run_restart(self, index: int, rng: np.random.Generator) -> _RestartOutcome:
        outcome = _RestartOutcome(index)
        budget = ResampleBudget(self.max_resamples)
        scan_order = self.embed_config.scan_order
        embedding = sample_injection(self.pattern, self.host, rng)
        self._note(outcome, "restart={} sample={}".format(index, embedding.images))
        while True:
            violation = find_violation(embedding, self.family, self.host, scan_order, rng)
            if violation is None:
                outcome.success = True
                outcome.embedding = embedding
                self._note(outcome, "restart={} success resamples={}".format(index, outcome.resamples))
                return outcome
            outcome.last_violation = violation
            try:
                budget.approve()
            except ResampleBudgetExhaustedException:
                self._note(outcome, "restart={} exhausted resamples={}".format(index, outcome.resamples))
                return outcome
            self._note(outcome, "restart={} violation={} support={} colors={}".format(
                index, violation.kind, list(violation.support), list(violation.colors)))
            resample(embedding, violation, self.pattern, self.host, rng)
            outcome.resamples += 1
            self._note(outcome, "restart={} resample={} images={}".format(index, outcome.resamples, embedding.images))

    def _note(self, outcome: _RestartOutcome, line: str):
        if self.record:
            outcome.transcript.append(line)


def embed(pattern: Pattern, host: ColoredHost, embed_config: EmbedConfig, config=None,
          observers: Optional[Sequence[RunObserverBase]] = None) -> EmbedReport:
    return Embedder(pattern, host, embed_config, config, observers).run()


def brute_force_embed(pattern: Pattern, host: ColoredHost, mode: str, limit: int = 10 ** 8) -> Optional[Embedding]:
    return find_colored_copy(pattern, host, mode, limit)
