import unittest

import networkx as nx
import numpy as np

from colembed.coloring import cyclic_latin_square, latin_square_to_coloring, random_bounded_coloring
from colembed.exceptions import InvalidPatternException, TooLargeException
from colembed.models import ColoredHost, EmbedConfig, Embedding, HostShape, Pattern, PROPER, RAINBOW, canonical_edge
from colembed.models.certificate import GLOBAL, LOCAL
from colembed.models.events import ILLEGAL_EDGE, MONOCHROME_CHERRY, REPEATED_COLOR_PAIR
from colembed.oracle import cross_check, exists_colored_copy, validate, verify
from colembed.pattern_analysis import complete_pattern, cycle_pattern, matching_pattern, path_pattern


def monochrome_host(shape: HostShape) -> ColoredHost:
    return ColoredHost(shape, {edge: 0 for edge in shape.edges()})


class ValidateTests(unittest.TestCase):

    def test_rainbow_copy(self):
        shape = HostShape.multipartite(2, 3)
        host = ColoredHost(shape, {edge: i for i, edge in enumerate(shape.edges())})
        report = validate(Embedding([0, 3, 1, 4, 2, 5]), cycle_pattern(6), host)
        self.assertTrue(report.passes(RAINBOW))
        self.assertTrue(report.passes(PROPER))
        self.assertEqual([], report.witnesses)

    def test_monochrome_cherry(self):
        host = monochrome_host(HostShape.multipartite(2, 2))
        report = validate(Embedding([0, 2, 1]), path_pattern(3), host)
        self.assertFalse(report.passes(PROPER))
        self.assertEqual([MONOCHROME_CHERRY], [witness.kind for witness in report.witnesses])

    def test_repeated_color_is_still_proper(self):
        host = monochrome_host(HostShape.multipartite(2, 2))
        passes, report = verify(Embedding([0, 2, 1, 3]), matching_pattern(2), host, PROPER)
        self.assertTrue(passes)
        self.assertFalse(report.passes(RAINBOW))
        self.assertEqual([REPEATED_COLOR_PAIR], [witness.kind for witness in report.witnesses])

    def test_illegal_edge(self):
        host = monochrome_host(HostShape.multipartite(2, 2))
        report = validate(Embedding([0, 1]), Pattern(2, [[0, 1]], 2, [0, 1]), host)
        self.assertTrue(report.has_illegal_edges())
        self.assertFalse(report.part_respecting)
        self.assertFalse(report.passes(PROPER))
        self.assertEqual(ILLEGAL_EDGE, report.witnesses[0].kind)

    def test_not_injective(self):
        host = monochrome_host(HostShape.hypergraph(5, 2))
        report = validate(Embedding([0, 1, 0]), Pattern(3, [[0, 1]], 2), host)
        self.assertFalse(report.injective)
        self.assertFalse(report.passes(RAINBOW))

    def test_length_mismatch(self):
        with self.assertRaises(InvalidPatternException):
            validate(Embedding([0]), path_pattern(3), monochrome_host(HostShape.multipartite(2, 2)))


class ExistenceTests(unittest.TestCase):

    def test_latin_transversals(self):
        for order, expected in ((4, False), (5, True)):
            with self.subTest(order=order):
                pattern = matching_pattern(order)
                host = latin_square_to_coloring(cyclic_latin_square(order))
                exists, witness = exists_colored_copy(pattern, host, RAINBOW)
                self.assertEqual(expected, exists)
                if exists:
                    self.assertTrue(validate(witness, pattern, host).passes(RAINBOW))
                    columns = sorted(witness[2 * i + 1] for i in range(order))
                    self.assertEqual(list(range(order, 2 * order)), columns)

    def test_invariant_under_relabeling_inside_parts(self):
        for seed in range(50):
            pattern, host, mode = CrossCheckTests._instance(seed)
            shape = host.shape
            rng = np.random.default_rng(seed)
            relabel = dict()
            for part in range(shape.m):
                vertices = list(shape.part_vertices(part))
                relabel.update(zip(vertices, (vertices[int(i)] for i in rng.permutation(len(vertices)))))
            relabeled = ColoredHost(shape, {canonical_edge(relabel[v] for v in edge): color
                                            for edge, color in zip(host.edges, host.colors)})
            with self.subTest(seed=seed, mode=mode):
                before, _ = exists_colored_copy(pattern, host, mode)
                after, witness = exists_colored_copy(pattern, relabeled, mode)
                self.assertEqual(before, after)
                if after:
                    self.assertTrue(validate(witness, pattern, relabeled).passes(mode))

    def test_search_limit(self):
        host = latin_square_to_coloring(cyclic_latin_square(6))
        with self.assertRaises(TooLargeException):
            exists_colored_copy(matching_pattern(6), host, RAINBOW, limit=1000)


class CrossCheckTests(unittest.TestCase):

    @staticmethod
    def _instance(seed: int):
        rng = np.random.default_rng(seed)
        left, right = (int(size) for size in rng.integers(1, 4, size=2))
        graph = nx.bipartite.random_graph(left, right, 0.6, seed=seed)
        pattern = Pattern.from_networkx(graph, [0] * left + [1] * right)
        n = int(rng.integers(3, 5))
        mode = PROPER if seed % 2 else RAINBOW
        k = int(rng.integers(1, 4))
        host = random_bounded_coloring(HostShape.multipartite(2, n), k, LOCAL if mode == PROPER else GLOBAL,
                                       seed=seed)
        return pattern, host, mode

    def test_embedder_never_contradicts_oracle(self):
        for seed in range(200):
            pattern, host, mode = self._instance(seed)
            report = cross_check(pattern, host, EmbedConfig(mode, max_resamples=200, restarts=3), [seed])
            with self.subTest(seed=seed):
                self.assertTrue(report.consistent, msg=report.to_json_dict())
                if not report.oracle_exists:
                    self.assertEqual(0, report.successes)

    def test_doubled_latin_square(self):
        shape = HostShape.multipartite(2, 4)
        host = ColoredHost(shape, {(i, 4 + j): ((i + j) % 4) // 2 for i in range(4) for j in range(4)})
        report = cross_check(cycle_pattern(8), host, EmbedConfig(PROPER, restarts=20), range(5))
        self.assertTrue(report.oracle_exists)
        self.assertTrue(report.consistent)
        self.assertEqual(5, report.runs)
        self.assertGreater(report.successes, 0)

    def test_no_copy(self):
        host = monochrome_host(HostShape.multipartite(3, 1))
        report = cross_check(complete_pattern(3), host, EmbedConfig(PROPER, max_resamples=3, restarts=1), range(4))
        self.assertFalse(report.oracle_exists)
        self.assertIsNone(report.witness)
        self.assertEqual((4, 0), (report.runs, report.successes))
        self.assertTrue(report.consistent)


if __name__ == '__main__':
    unittest.main()
