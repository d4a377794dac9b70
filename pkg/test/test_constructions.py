import os
import tempfile
import unittest

import numpy as np

from colembed.coloring import measure_boundedness
from colembed.constructions import (build_block_coloring, build_design, build_fan_coloring, build_first_ell_coloring,
                                    build_plane_pattern, build_projective_plane, build_tree_pattern, is_prime,
                                    split_clusters, write_incidence_csv)
from colembed.embedder import find_violation, sample_injection
from colembed.exceptions import (DegenerateDimsException, DivisibilityException, NotPrimeException,
                                 UnsupportedParametersException)
from colembed.families import family_for
from colembed.models import PROPER
from colembed.models.events import MONOCHROME_CHERRY, OVERLAP_PAIR
from colembed.oracle import exists_colored_copy
from colembed.pattern_analysis import complete_pattern


class ProjectivePlaneTests(unittest.TestCase):

    def test_fano_plane(self):
        plane = build_projective_plane(2)
        self.assertEqual(7, len(plane.points))
        self.assertEqual(7, len(plane.lines))
        self.assertTrue(plane.check())
        matrix = plane.incidence_matrix()
        self.assertTrue(np.array_equal(np.full(7, 3), matrix.sum(axis=0)))
        self.assertTrue(np.array_equal(np.full(7, 3), matrix.sum(axis=1)))

    def test_order_three(self):
        plane = build_projective_plane(3)
        self.assertEqual(13, plane.order)
        self.assertTrue(plane.check())
        self.assertEqual(4, len(plane.lines_through(0)))

    def test_non_prime_order(self):
        self.assertFalse(is_prime(4))
        with self.assertRaises(NotPrimeException):
            build_projective_plane(4)

    def test_incidence_csv(self):
        matrix = build_projective_plane(2).incidence_matrix()
        with tempfile.TemporaryDirectory() as folder:
            path = os.path.join(folder, "incidence.csv")
            write_incidence_csv(matrix, path)
            self.assertTrue(np.array_equal(matrix, np.loadtxt(path, delimiter=",", dtype=int)))


class PlanePatternTests(unittest.TestCase):

    def setUp(self):
        with self.assertLogs('colembed.constructions', level='WARNING'):
            self.plane_pattern = build_plane_pattern(2, 2)

    def test_max_degree(self):
        self.assertEqual(5, self.plane_pattern.expected_max_degree)
        self.assertEqual(5, self.plane_pattern.pattern.profile().max_degree)

    def test_parts(self):
        self.assertEqual([13, 13], self.plane_pattern.part_sizes)
        self.assertFalse(self.plane_pattern.within_three_q_squared)
        self.assertEqual(7 * 3 + 2 * 6 * 2, self.plane_pattern.pattern.edge_count)

    def test_more_parts(self):
        plane_pattern = build_plane_pattern(3, 4)
        self.assertEqual(4 + 6, plane_pattern.pattern.profile().max_degree)
        self.assertTrue(plane_pattern.within_three_q_squared)

    def test_fan_coloring_kills_every_incidence_embedding(self):
        incidence = self.plane_pattern.incidence_pattern()
        self.assertEqual([0] * 7 + [1] * 7, list(incidence.parts))
        host = build_fan_coloring(2, 2, 12).host
        family = family_for(incidence, host.shape, PROPER)
        rng = np.random.default_rng(71)
        for _ in range(10 ** 4):
            violation = find_violation(sample_injection(incidence, host, rng), family, host)
            self.assertIsNotNone(violation)
            self.assertEqual(MONOCHROME_CHERRY, violation.kind)

    def test_single_part(self):
        with self.assertRaises(DegenerateDimsException):
            build_plane_pattern(2, 1)


class FanColoringTests(unittest.TestCase):

    def test_exact_global_bound(self):
        coloring = build_fan_coloring(2, 2, 12)
        report = measure_boundedness(coloring.host)
        self.assertEqual(2, report.k_global)
        self.assertEqual(2, report.k_local)
        self.assertEqual([[2] * 6, [2] * 6], coloring.cluster_sizes())

    def test_uneven_clusters(self):
        coloring = build_fan_coloring(2, 2, 13)
        self.assertEqual([3, 2, 2, 2, 2, 2], coloring.cluster_sizes()[0])
        self.assertEqual(3, measure_boundedness(coloring.host).k_global)
        self.assertEqual(0, coloring.cluster_of(13 + 2))

    def test_too_few_vertices(self):
        with self.assertRaises(DegenerateDimsException):
            build_fan_coloring(2, 2, 5)

    def test_split_clusters(self):
        self.assertEqual([[4, 5], [6], [7]], split_clusters(range(4, 8), 3))


class FirstEllColoringTests(unittest.TestCase):

    def test_no_proper_complete_graph(self):
        host = build_first_ell_coloring(6, 2, 1)
        exists, witness = exists_colored_copy(complete_pattern(4), host, PROPER)
        self.assertFalse(exists)
        self.assertIsNone(witness)
        report = measure_boundedness(host)
        self.assertEqual(5, report.k_global)
        self.assertLessEqual(report.k_global, 6)

    def test_triples(self):
        self.assertEqual(6, measure_boundedness(build_first_ell_coloring(5, 3, 1)).k_global)
        self.assertEqual(3, measure_boundedness(build_first_ell_coloring(5, 3, 2)).k_global)

    def test_bad_ell(self):
        with self.assertRaises(DegenerateDimsException):
            build_first_ell_coloring(5, 3, 3)


class DesignTests(unittest.TestCase):

    def test_steiner_triple_system(self):
        design = build_design(3, 1, 9)
        self.assertEqual(12, len(design.edges))
        self.assertTrue(design.check())
        self.assertEqual(4, design.ell_degree)
        self.assertEqual({4}, set(design.ell_set_degrees().values()))
        self.assertTrue(design.to_pattern().profile().satisfies_cascade())

    def test_larger_triple_system(self):
        design = build_design(3, 1, 15)
        self.assertEqual(35, len(design.edges))
        self.assertTrue(design.check())

    def test_complete_graph_design(self):
        design = build_design(2, 1, 5)
        self.assertEqual(10, len(design.edges))
        self.assertEqual(4, design.ell_degree)
        self.assertEqual((5, 10), design.incidence_matrix().shape)

    def test_unsupported(self):
        with self.assertRaises(UnsupportedParametersException):
            build_design(3, 1, 8)
        with self.assertRaises(UnsupportedParametersException):
            build_design(4, 2, 10)


class TreeAndBlockTests(unittest.TestCase):

    def test_full_tree(self):
        tree = build_tree_pattern(3, 3)
        self.assertEqual(13, tree.pattern.vertex_count)
        self.assertFalse(tree.truncated)
        deltas = tree.pattern.profile().deltas
        self.assertEqual(4, deltas[2], msg="each first-level pair lies in the root edge and n1 child edges")
        self.assertEqual(3, tree.pattern.degrees()[0])

    def test_block_coloring(self):
        report = measure_boundedness(build_block_coloring(8, 3))
        self.assertEqual(24, report.k_global)
        self.assertLessEqual(report.k_global, 4 ** 3)

    def test_block_divisibility(self):
        with self.assertRaises(DivisibilityException):
            build_block_coloring(9, 3)

    def test_truncated_tree_always_violates(self):
        tree = build_tree_pattern(3, 3, max_vertices=8)
        self.assertTrue(tree.truncated)
        self.assertEqual(8, tree.pattern.vertex_count)
        host = build_block_coloring(8, 3)
        family = family_for(tree.pattern, host.shape, PROPER)
        rng = np.random.default_rng(5)
        for _ in range(10 ** 4):
            violation = find_violation(sample_injection(tree.pattern, host, rng), family, host)
            self.assertIsNotNone(violation)
            self.assertEqual(OVERLAP_PAIR, violation.kind)

    def test_degenerate_tree(self):
        with self.assertRaises(DegenerateDimsException):
            build_tree_pattern(4, 2)


if __name__ == '__main__':
    unittest.main()
