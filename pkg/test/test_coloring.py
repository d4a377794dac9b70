import os
import tempfile
import unittest

from colembed.coloring import (build_host, check_latin, coloring_to_latin_square, cyclic_latin_square,
                               latin_square_to_coloring, measure_boundedness, random_bounded_coloring,
                               read_latin_csv, write_latin_csv)
from colembed.exceptions import InvalidShapeException, NotLatinException
from colembed.models import ColoredHost, HostShape
from colembed.models.certificate import GLOBAL, LOCAL


class BuildHostTests(unittest.TestCase):

    def test_multipartite_edge_count(self):
        shape = HostShape.multipartite(3, 2)
        edges = list(build_host(shape))
        self.assertEqual(12, len(edges), msg="K_(3x2) has C(3,2)*2*2 edges")
        self.assertEqual(edges, sorted(edges))
        self.assertTrue(all(shape.part_of(u) != shape.part_of(v) for u, v in edges))

    def test_hypergraph_edge_count(self):
        edges = list(build_host(HostShape.hypergraph(6, 3)))
        self.assertEqual(20, len(edges))
        self.assertIn((0, 1, 2), edges)

    def test_degenerate_shapes(self):
        with self.assertRaises(InvalidShapeException):
            HostShape.multipartite(1, 4)
        with self.assertRaises(InvalidShapeException):
            HostShape.hypergraph(2, 3)


class BoundednessTests(unittest.TestCase):

    def test_cyclic_latin_square_of_order_three(self):
        report = measure_boundedness(latin_square_to_coloring(cyclic_latin_square(3)))
        self.assertEqual(1, report.k_local)
        self.assertEqual(3, report.k_global)
        self.assertTrue(report.is_bounded(1, LOCAL))
        self.assertFalse(report.is_bounded(2, GLOBAL))

    def test_order_two_square(self):
        report = measure_boundedness(latin_square_to_coloring([[0, 1], [1, 0]]))
        self.assertEqual((1, 2), (report.k_local, report.k_global))

    def test_monochromatic_hypergraph(self):
        shape = HostShape.hypergraph(5, 3)
        host = ColoredHost(shape, {edge: 0 for edge in shape.edges()})
        report = measure_boundedness(host)
        self.assertEqual(10, report.k_global)
        self.assertEqual(6, report.k_local, msg="each vertex lies in C(4,2) triples")
        self.assertLessEqual(report.k_local, report.k_global)

    def test_rainbow_is_globally_one_bounded(self):
        shape = HostShape.multipartite(2, 4)
        host = ColoredHost(shape, {edge: i for i, edge in enumerate(shape.edges())})
        report = measure_boundedness(host)
        self.assertEqual((1, 1), (report.k_local, report.k_global))
        self.assertEqual({1: 16}, report.size_histogram)


class LatinTests(unittest.TestCase):

    def test_round_trip_keeps_symbols(self):
        square = [["a", "b", "c"], ["c", "a", "b"], ["b", "c", "a"]]
        host = latin_square_to_coloring(square)
        self.assertEqual(square, coloring_to_latin_square(host))
        self.assertEqual(host.color_of_pair(0, 3), host.color_of_pair(1, 4))

    def test_not_latin(self):
        with self.assertRaises(NotLatinException):
            check_latin([[0, 1], [0, 1]])
        with self.assertRaises(NotLatinException):
            check_latin([[0, 1, 2], [1, 2, 0]])

    def test_csv_round_trip(self):
        square = cyclic_latin_square(4)
        with tempfile.TemporaryDirectory() as folder:
            path = os.path.join(folder, "square.csv")
            write_latin_csv(square, path)
            self.assertEqual(square, read_latin_csv(path))

    def test_non_square_host_rejected(self):
        shape = HostShape.multipartite(3, 2)
        host = ColoredHost(shape, {edge: 0 for edge in shape.edges()})
        with self.assertRaises(InvalidShapeException):
            coloring_to_latin_square(host)


class RandomColoringTests(unittest.TestCase):

    def setUp(self):
        self.shape = HostShape.multipartite(2, 6)

    def test_global_bound_met(self):
        for k in (1, 2, 5):
            with self.subTest(k=k):
                host = random_bounded_coloring(self.shape, k, GLOBAL, seed=3)
                self.assertLessEqual(measure_boundedness(host).k_global, k)

    def test_local_bound_met(self):
        for k in (1, 2, 3):
            with self.subTest(k=k):
                host = random_bounded_coloring(HostShape.hypergraph(7, 3), k, LOCAL, seed=5)
                self.assertLessEqual(measure_boundedness(host).k_local, k)

    def test_seeded(self):
        first = random_bounded_coloring(self.shape, 2, GLOBAL, seed=11)
        second = random_bounded_coloring(self.shape, 2, GLOBAL, seed=11)
        self.assertEqual(first.to_json_dict(), second.to_json_dict())

    def test_zero_k_rejected(self):
        with self.assertRaises(ValueError):
            random_bounded_coloring(self.shape, 0)


class HostFormatTests(unittest.TestCase):

    def test_text_round_trip_with_tuple_labels(self):
        shape = HostShape.hypergraph(4, 2)
        host = ColoredHost(shape, {edge: edge[:1] for edge in shape.edges()})
        parsed = ColoredHost.from_text(host.to_text())
        self.assertEqual(host.colors, parsed.colors)
        self.assertEqual(shape, parsed.shape)

    def test_json_round_trip(self):
        host = latin_square_to_coloring(cyclic_latin_square(3))
        self.assertEqual(host.colors, ColoredHost.from_json_dict(host.to_json_dict()).colors)

    def test_missing_edge_rejected(self):
        shape = HostShape.multipartite(2, 2)
        with self.assertRaises(InvalidShapeException):
            ColoredHost.from_edge_colors(shape, [[0, 2], [0, 3], [1, 2]], [0, 1, 2])

    def test_illegal_edge_rejected(self):
        shape = HostShape.multipartite(2, 2)
        with self.assertRaises(InvalidShapeException):
            ColoredHost.from_edge_colors(shape, [[0, 1], [0, 3], [1, 2], [1, 3]], [0, 1, 2, 3])

    def test_text_without_header_rejected(self):
        with self.assertRaises(InvalidShapeException):
            ColoredHost.from_text("0 2 1\n")


if __name__ == '__main__':
    unittest.main()
