import logging
from itertools import combinations
from typing import Iterable, Optional, Tuple

from .exceptions import InvalidPatternException
from .embedder import Embedder
from .models import ColoredHost, CrossCheckReport, EmbedConfig, Embedding, Pattern, ValidationReport, Violation
from .models.events import ILLEGAL_EDGE, MONOCHROME_CHERRY, OVERLAP_PAIR, REPEATED_COLOR_PAIR
from .search import find_colored_copy

logger = logging.getLogger(__name__)


def validate(embedding: Embedding, pattern: Pattern, host: ColoredHost) -> ValidationReport:
    """Full-scan verdict over all pattern edge pairs, independent of the bad-event families."""
    if len(embedding) != pattern.vertex_count:
        raise InvalidPatternException("embedding has {} images for {} pattern vertices"
                                      .format(len(embedding), pattern.vertex_count))
    images = embedding.images
    witnesses = list()
    colored = list()
    for edge in pattern.edges:
        image = sorted(images[u] for u in edge)
        if host.has_edge(image):
            colored.append((edge, image, host.color_of(image)))
        else:
            witnesses.append(Violation(ILLEGAL_EDGE, edge, (edge,), (image,), ()))
    for (first, first_image, first_color), (second, second_image, second_color) in combinations(colored, 2):
        if first_color != second_color:
            continue
        overlap = len(set(first) & set(second))
        if overlap == 0:
            kind = REPEATED_COLOR_PAIR
        elif pattern.is_graph:
            kind = MONOCHROME_CHERRY
        else:
            kind = OVERLAP_PAIR
        witnesses.append(Violation(kind, sorted(set(first) | set(second)), (first, second),
                                   (first_image, second_image), (first_color, second_color)))
    return ValidationReport(embedding.is_injective(), embedding.is_part_respecting(pattern, host), witnesses)


def exists_colored_copy(pattern: Pattern, host: ColoredHost, mode: str,
                        limit: int = 10 ** 8) -> Tuple[bool, Optional[Embedding]]:
    witness = find_colored_copy(pattern, host, mode, limit)
    return witness is not None, witness


def verify(embedding: Embedding, pattern: Pattern, host: ColoredHost, mode: str) -> Tuple[bool, ValidationReport]:
    report = validate(embedding, pattern, host)
    return report.passes(mode), report


def cross_check(pattern: Pattern, host: ColoredHost, embed_config: EmbedConfig, seeds: Iterable[int],
                config=None) -> CrossCheckReport:
    """Run the embedder over a seed sweep against one exhaustive oracle decision.

    A success the oracle rules out, or a returned copy that fails validation,
    is recorded as a discrepancy.
    """
    limit = config.oracle_search_limit if config is not None else 10 ** 8
    exists, witness = exists_colored_copy(pattern, host, embed_config.mode, limit)
    report = CrossCheckReport(embed_config.mode, exists, None if witness is None else witness.to_json_dict())
    embedder = Embedder(pattern, host, embed_config, config)
    for seed in seeds:
        result = embedder.run(seed)
        report.runs += 1
        if not result.success:
            continue
        report.successes += 1
        if result.successful_restart == 0 and result.resamples == 0:
            report.first_attempt_successes += 1
        if not exists:
            report.discrepancies.append({'seed': seed, 'reason': "embedder succeeded where no copy exists"})
        elif not validate(result.embedding, pattern, host).passes(embed_config.mode):
            report.discrepancies.append({'seed': seed, 'reason': "returned embedding fails validation"})
    logger.info("cross-check %s: oracle=%s runs=%d successes=%d consistent=%s", report.mode, exists,
                report.runs, report.successes, report.consistent)
    return report
