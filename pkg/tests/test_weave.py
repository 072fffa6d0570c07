import unittest

import fixtures

from altlinkchecker import diagram as dg
from altlinkchecker import maps, weave
from altlinkchecker.errors import MalformedDiagram, MalformedMap, NoPerfectMatching, NotAlternatable
from altlinkchecker.models import TilingQuotient


class TestWeaveFromMap(unittest.TestCase):
    def test_square_weave(self):
        quotient = TilingQuotient(fixtures.torus_weave2().map, "square tiling")
        diagram = weave.weave_from_map(quotient)
        self.assertEqual(diagram.over, (1, 6))

    def test_rejects_three_valent(self):
        with self.assertRaises(MalformedDiagram):
            weave.weave_from_map(fixtures.theta_torus())


class TestPerfectMatching(unittest.TestCase):
    def test_least_matching_of_honeycomb(self):
        self.assertEqual(weave.least_perfect_matching(fixtures.honeycomb_brick().map), [1, 3])

    def test_theta(self):
        self.assertEqual(weave.least_perfect_matching(fixtures.theta_torus().map), [1])

    def test_odd_vertex_count(self):
        with self.assertRaises(NoPerfectMatching):
            weave.least_perfect_matching(fixtures.trefoil().map)


class TestAugment(unittest.TestCase):
    def test_theta_gains_one_bigon(self):
        augmented = weave.augment_three_regular(fixtures.theta_torus())
        m = augmented.map
        self.assertEqual(m.rotation, ((1, 7, 2, 3), (8, 4, 5, 6)))
        self.assertEqual(m.alpha(7), 8)
        self.assertEqual(maps.surface_info(m).euler_char, 0)
        self.assertIn("bigons on edges [1]", augmented.source)

    def test_theta_weave_cannot_alternate(self):
        augmented = weave.augment_three_regular(fixtures.theta_torus())
        with self.assertRaises(NotAlternatable) as ctx:
            weave.weave_from_map(augmented)
        self.assertEqual(len(ctx.exception.cycle) % 2, 1)

    def test_honeycomb_keeps_its_surface(self):
        quotient = fixtures.honeycomb_brick()
        augmented = weave.augment_three_regular(quotient)
        before = maps.surface_info(quotient.map)
        after = maps.surface_info(augmented.map)
        self.assertEqual((after.euler_char, after.orientable), (before.euler_char, before.orientable))
        self.assertTrue(all(len(cyc) == 4 for cyc in augmented.map.rotation))
        self.assertEqual(augmented.map.edge_count, quotient.map.edge_count + 2)
        degrees = sorted(f.degree for f in maps.trace_faces(augmented.map))
        self.assertEqual(degrees[:2], [2, 2])

    def test_honeycomb_weave_alternates(self):
        diagram = weave.weave_from_map(weave.augment_three_regular(fixtures.honeycomb_brick()))
        self.assertEqual(diagram.crossing_count, 4)
        self.assertTrue(dg.is_alternating(diagram))
        self.assertEqual(maps.surface_info(diagram.map).genus, 1)

    def test_rejects_four_valent(self):
        with self.assertRaises(MalformedMap):
            weave.augment_three_regular(TilingQuotient(fixtures.torus_weave2().map))


class TestDensityStats(unittest.TestCase):
    def test_torus_weave(self):
        stats = weave.density_stats(fixtures.torus_weave2())
        self.assertEqual(stats.crossings_per_fundamental_domain, 2)
        self.assertEqual(stats.component_count, 2)
        self.assertEqual(stats.reduced_crossing_count, 2)
        self.assertEqual(stats.surface.genus, 1)

    def test_kinked_trefoil(self):
        stats = weave.density_stats(fixtures.add_kink(fixtures.trefoil(), 1))
        self.assertEqual((stats.crossings_per_fundamental_domain, stats.reduced_crossing_count), (4, 3))
        self.assertEqual(stats.component_count, 1)


if __name__ == "__main__":
    unittest.main()
