import unittest
from itertools import combinations
from math import comb

import networkx as nx

from colembed.exceptions import InvalidPatternException
from colembed.models import Pattern
from colembed.pattern_analysis import (bipartite_hamilton_cycle, check_linearity, complete_pattern, cycle_pattern,
                                       degree_profile, enumerate_cherries, enumerate_overlap_pairs,
                                       enumerate_quadruples, fano_pattern, from_graph, greedy_partition,
                                       matching_pattern, overlapping_cycle, path_pattern, random_pattern,
                                       star_pattern)


class DegreeProfileTests(unittest.TestCase):

    def test_graph_profile(self):
        profile = degree_profile(star_pattern(4))
        self.assertEqual((4, 4), profile.deltas)
        self.assertEqual(4, profile.max_degree)

    def test_fano_profile(self):
        profile = degree_profile(fano_pattern())
        self.assertEqual((7, 3, 1), profile.deltas)
        self.assertTrue(profile.satisfies_cascade())

    def test_cascade_on_random_hypergraphs(self):
        for n, r, ell in ((10, 3, 1), (8, 4, 2), (10, 3, 2)):
            with self.subTest(n=n, r=r, ell=ell):
                self.assertTrue(degree_profile(overlapping_cycle(n, r, ell)).satisfies_cascade())


class EnumerationTests(unittest.TestCase):

    def test_cherry_count_matches_degrees(self):
        for seed in range(10):
            with self.subTest(seed=seed):
                pattern = random_pattern(12, 0.3, seed)
                expected = sum(comb(d, 2) for d in pattern.degrees())
                cherries = enumerate_cherries(pattern)
                self.assertEqual(expected, len(cherries))
                self.assertEqual(len(cherries), len(set(cherries)))

    def test_quadruple_count(self):
        for seed in range(10):
            with self.subTest(seed=seed):
                pattern = random_pattern(10, 0.35, seed)
                intersecting = sum(1 for e, f in combinations(pattern.edges, 2) if set(e) & set(f))
                self.assertEqual(comb(pattern.edge_count, 2) - intersecting, len(enumerate_quadruples(pattern)))

    def test_path_cherries(self):
        cherries = enumerate_cherries(path_pattern(3))
        self.assertEqual(1, len(cherries))
        self.assertEqual((0, 1, 2), cherries[0].support)

    def test_cherries_need_graphs(self):
        with self.assertRaises(InvalidPatternException):
            enumerate_cherries(fano_pattern())

    def test_overlap_pairs(self):
        two_triples = Pattern(5, [[0, 1, 2], [2, 3, 4]], 3)
        self.assertEqual(1, len(enumerate_overlap_pairs(two_triples, 1)))
        loose = overlapping_cycle(6, 3, 1)
        self.assertEqual(3, loose.edge_count)
        self.assertEqual(3, len(enumerate_overlap_pairs(loose, 1)))
        self.assertEqual(0, len(enumerate_overlap_pairs(loose, 0)))

    def test_overlap_pairs_against_double_loop(self):
        pattern = overlapping_cycle(12, 4, 2)
        for overlap in range(4):
            with self.subTest(overlap=overlap):
                expected = [(e, f) for e, f in combinations(pattern.edges, 2) if len(set(e) & set(f)) == overlap]
                found = [pair.edges for pair in enumerate_overlap_pairs(pattern, overlap)]
                self.assertEqual(expected, found)


class LinearityTests(unittest.TestCase):

    def test_fano_is_linear(self):
        self.assertTrue(check_linearity(fano_pattern(), 1))

    def test_triples_sharing_a_pair(self):
        self.assertFalse(check_linearity(Pattern(4, [[0, 1, 2], [0, 1, 3]], 3), 1))

    def test_tight_cycle(self):
        self.assertTrue(check_linearity(overlapping_cycle(5, 3, 2), 2))

    def test_ell_out_of_range(self):
        with self.assertRaises(InvalidPatternException):
            check_linearity(fano_pattern(), 3)


class PartitionTests(unittest.TestCase):

    def test_greedy_partition_is_proper(self):
        for seed in range(5):
            with self.subTest(seed=seed):
                pattern = random_pattern(10, 0.4, seed)
                self.assertTrue(all(pattern.parts[u] != pattern.parts[v] for u, v in pattern.edges))

    def test_equitable_partition_above_max_degree(self):
        for seed in range(10):
            graph = nx.gnp_random_graph(13, 0.25, seed=seed)
            m = 1 + max((degree for _, degree in graph.degree()), default=0)
            pattern = from_graph(graph, m)
            with self.subTest(seed=seed, m=m):
                self.assertTrue(all(pattern.parts[u] != pattern.parts[v] for u, v in pattern.edges))
                sizes = [pattern.part_sizes().get(part, 0) for part in range(m)]
                self.assertLessEqual(max(sizes) - min(sizes), 1)

    def test_greedy_coloring_is_rebalanced(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(4))
        graph.add_edge(0, 1)
        pattern = from_graph(graph)
        self.assertEqual({0: 2, 1: 2}, pattern.part_sizes(), msg="plain greedy would put 0, 2 and 3 together")
        self.assertNotEqual(pattern.parts[0], pattern.parts[1])

    def test_bounded_partition_fails_on_triangle(self):
        with self.assertRaises(InvalidPatternException):
            greedy_partition(complete_pattern(3).with_parts([0, 1, 2]), 2)

    def test_even_cycle_is_bipartite(self):
        pattern = cycle_pattern(8)
        self.assertEqual({0: 4, 1: 4}, pattern.part_sizes())

    def test_hamilton_cycle_parts(self):
        pattern = bipartite_hamilton_cycle(4)
        self.assertEqual(8, pattern.edge_count)
        self.assertEqual(2, pattern.profile().max_degree)
        self.assertEqual({0: 4, 1: 4}, pattern.part_sizes())

    def test_edge_inside_part_rejected(self):
        with self.assertRaises(InvalidPatternException):
            Pattern(3, [[0, 1]], 2, [0, 0, 1])

    def test_networkx_round_trip(self):
        pattern = from_graph(nx.petersen_graph())
        back = Pattern.from_networkx(pattern.to_networkx())
        self.assertEqual(pattern.edges, back.edges)
        self.assertEqual(pattern.parts, back.parts)

    def test_matching(self):
        pattern = matching_pattern(3)
        self.assertEqual(3, pattern.edge_count)
        self.assertEqual(3, len(enumerate_quadruples(pattern)))
        self.assertEqual(0, len(enumerate_cherries(pattern)))


class PatternFormatTests(unittest.TestCase):

    def test_text(self):
        pattern = Pattern.from_text("# triangle-free\n0 1\n1 2\n")
        self.assertEqual(3, pattern.vertex_count)
        self.assertEqual(pattern.edges, Pattern.from_text(pattern.to_text()).edges)

    def test_json_infers_vertex_count_from_parts(self):
        pattern = Pattern.from_json_dict({'edges': [[0, 1]], 'parts': [0, 1, 0]})
        self.assertEqual(3, pattern.vertex_count)

    def test_duplicate_edges_rejected(self):
        with self.assertRaises(InvalidPatternException):
            Pattern(3, [[0, 1], [1, 0]])

    def test_induced(self):
        pattern = cycle_pattern(6).induced([0, 1, 2])
        self.assertEqual(((0, 1), (1, 2)), pattern.edges)


if __name__ == '__main__':
    unittest.main()
