import random
import unittest

import fixtures
import oracles

from altlinkchecker import maps, primecheck
from altlinkchecker.errors import InvalidCurve, MalformedMap
from altlinkchecker.models import CombinatorialMap, EdgePoint, EmbeddedCurve, FaceArc, VertexPoint


def random_relabeling(m: CombinatorialMap, rng: random.Random):
    targets = rng.sample(range(100, 100 + 10 * len(m.darts)), len(m.darts))
    return dict(zip(m.darts, targets))


class TestMapConstruction(unittest.TestCase):
    def test_rejects_unpaired_dart(self):
        with self.assertRaises(MalformedMap):
            CombinatorialMap((( 1, 2, 3),), {1: 2, 2: 1})

    def test_rejects_fixed_point(self):
        with self.assertRaises(MalformedMap):
            CombinatorialMap(((1, 2),), {1: 1, 2: 2})

    def test_rejects_dart_in_two_vertices(self):
        with self.assertRaises(MalformedMap):
            CombinatorialMap.from_edges([(1, 2), (2, 3)], [(1, 3)])

    def test_rejects_bad_sign(self):
        with self.assertRaises(MalformedMap):
            CombinatorialMap(((1, 2),), {1: 2, 2: 1}, {1: 5})

    def test_rotation_navigation(self):
        m = fixtures.torus_one().map
        self.assertEqual(m.succ(4), 1)
        self.assertEqual(m.pred(1), 4)
        self.assertEqual(m.alpha(2), 4)
        self.assertEqual(m.edge_key(3), 1)

    def test_equal_maps_hash_equal(self):
        a = CombinatorialMap.from_edges([(1, 2, 3, 4)], [(1, 3), (2, 4, 1)])
        b = CombinatorialMap(((1, 2, 3, 4),), {4: 2, 3: 1, 2: 4, 1: 3})
        self.assertEqual(a, b)
        self.assertEqual(hash(a), hash(b))
        self.assertEqual(len({a, b, fixtures.klein_one().map}), 2)
        self.assertEqual(len({fixtures.trefoil(), fixtures.trefoil(), fixtures.figure_eight()}), 2)


class TestFaces(unittest.TestCase):
    def test_torus_one_single_square(self):
        faces = maps.trace_faces(fixtures.torus_one().map)
        self.assertEqual([f.degree for f in faces], [4])
        self.assertEqual(faces[0].darts, (1, 4, 3, 2))

    def test_trefoil_bigons_and_triangles(self):
        faces = maps.trace_faces(fixtures.trefoil().map)
        self.assertEqual(sorted(f.degree for f in faces), [2, 2, 2, 3, 3])

    def test_degree_sum_is_twice_edges(self):
        for diagram in (fixtures.trefoil(), fixtures.granny(), fixtures.klein_one(), fixtures.nonorient_weave()):
            faces = maps.trace_faces(diagram.map)
            self.assertEqual(sum(f.degree for f in faces), 2 * diagram.map.edge_count)

    def test_face_count_matches_oracle(self):
        cases = [fixtures.trefoil(), fixtures.figure_eight(), fixtures.torus_one(), fixtures.klein_one(),
                 fixtures.torus_weave2(), fixtures.nonorient_weave()]
        for diagram in cases:
            self.assertEqual(len(maps.trace_faces(diagram.map)), oracles.face_count(diagram.map))

    def test_each_corner_listed_once(self):
        m = fixtures.granny().map
        corners = maps.corner_index(m, maps.trace_faces(m))
        self.assertEqual(len(corners), 4 * m.vertex_count)

    def test_each_edge_has_two_sides(self):
        m = fixtures.klein_one().map
        occ = maps.edge_occurrences(m, maps.trace_faces(m))
        self.assertEqual({k: len(v) for k, v in occ.items()}, {1: 2, 2: 2})


class TestSurfaceInfo(unittest.TestCase):
    def test_trefoil_is_sphere(self):
        info = maps.surface_info(fixtures.trefoil().map)
        self.assertEqual((info.euler_char, info.orientable, info.genus), (2, True, 0))
        self.assertEqual((info.vertex_count, info.edge_count, info.face_count), (3, 6, 5))
        self.assertTrue(info.is_sphere)

    def test_torus_one(self):
        info = maps.surface_info(fixtures.torus_one().map)
        self.assertEqual((info.euler_char, info.orientable, info.genus), (0, True, 1))

    def test_klein_one(self):
        info = maps.surface_info(fixtures.klein_one().map)
        self.assertEqual((info.euler_char, info.orientable, info.genus), (0, False, 2))
        self.assertTrue(info.is_klein_bottle)

    def test_genus_two_quotient(self):
        info = maps.surface_info(fixtures.genus2_octagons().map)
        self.assertEqual((info.euler_char, info.orientable, info.genus), (-2, True, 2))

    def test_nonorientable_weave(self):
        info = maps.surface_info(fixtures.nonorient_weave().map)
        self.assertEqual((info.euler_char, info.orientable), (-1, False))
        self.assertEqual(info.genus, 3)

    def test_disjoint_union_counts_pieces(self):
        union = fixtures.disjoint_union(fixtures.trefoil(), fixtures.trefoil())
        info = maps.surface_info(union.map)
        self.assertEqual(info.components, 2)
        self.assertEqual(info.euler_char, 4)
        self.assertFalse(info.is_sphere)

    def test_euler_char_matches_oracle(self):
        for diagram in (fixtures.granny(), fixtures.two_braid(4), fixtures.nonorient_weave()):
            self.assertEqual(maps.surface_info(diagram.map).euler_char, oracles.euler_char(diagram.map))

    def test_invariant_under_relabeling(self):
        rng = random.Random(7)
        for diagram in (fixtures.granny(), fixtures.klein_one(), fixtures.nonorient_weave()):
            before = maps.surface_info(diagram.map)
            for _ in range(5):
                renamed = maps.relabel_map(diagram.map, random_relabeling(diagram.map, rng))
                self.assertEqual(maps.surface_info(renamed), before)


class TestCutAlongCurve(unittest.TestCase):
    def test_loop_inside_a_face_bounds_disk(self):
        m = fixtures.trefoil().map
        cut = maps.cut_along_curve(m, EmbeddedCurve.loop_in_face(0))
        self.assertTrue(cut.separates)
        self.assertTrue(cut.bounds_disk)
        disk = cut.disk_sides[0]
        self.assertEqual(disk.vertices, frozenset())
        self.assertEqual(sum(s.euler_char for s in cut.sides), 2)

    def test_torus_corner_curve_is_essential(self):
        m = fixtures.torus_one().map
        curve = EmbeddedCurve((VertexPoint(0),), (FaceArc(0, 3, 1),))
        cut = maps.cut_along_curve(m, curve)
        self.assertFalse(cut.separates)
        self.assertFalse(cut.bounds_disk)
        self.assertEqual([s.euler_char for s in cut.sides], [0])

    def test_torus_curve_through_one_edge_twice_is_not_a_disk(self):
        m = fixtures.torus_one().map
        # face walk (1, 4, 3, 2): edge 1 sits at positions 0 and 2, edge 2 at 1 and 3
        curve = EmbeddedCurve((EdgePoint(1), EdgePoint(2)), (FaceArc(0, 0, 1), FaceArc(0, 3, 2)))
        cut = maps.cut_along_curve(m, curve)
        self.assertFalse(cut.bounds_disk)

    def test_granny_separating_curve(self):
        diagram = fixtures.granny()
        witness = primecheck.first_failing_cut(diagram).witness
        cut = maps.cut_along_curve(diagram.map, witness.realized)
        self.assertTrue(cut.separates)
        self.assertEqual(sorted(len(s.vertices) for s in cut.sides), [3, 3])
        self.assertEqual(sorted(s.euler_char for s in cut.sides), [1, 1])

    def test_side_characteristics_sum_to_surface(self):
        m = fixtures.torus_weave2().map
        curve = EmbeddedCurve((EdgePoint(1), EdgePoint(2)), (FaceArc(0, 0, 1), FaceArc(1, 3, 0)))
        cut = maps.cut_along_curve(m, curve)
        self.assertEqual(sum(s.euler_char for s in cut.sides), 0)

    def test_rejects_point_off_the_arc_face(self):
        m = fixtures.torus_one().map
        curve = EmbeddedCurve((EdgePoint(1), EdgePoint(2)), (FaceArc(0, 1, 1), FaceArc(0, 3, 2)))
        with self.assertRaises(InvalidCurve):
            maps.cut_along_curve(m, curve)

    def test_rejects_tangent_touch(self):
        m = fixtures.torus_one().map
        curve = EmbeddedCurve((EdgePoint(1), EdgePoint(2)), (FaceArc(0, 0, 1), FaceArc(0, 1, 0)))
        with self.assertRaises(InvalidCurve):
            maps.cut_along_curve(m, curve)

    def test_rejects_non_diagonal_vertex_passage(self):
        m = fixtures.torus_one().map
        curve = EmbeddedCurve((VertexPoint(0),), (FaceArc(0, 0, 1),))
        with self.assertRaises(InvalidCurve):
            maps.cut_along_curve(m, curve)


class TestCutsAgainstRefinement(unittest.TestCase):
    def cases(self):
        return [fixtures.granny(), fixtures.figure_eight(), fixtures.two_braid(4), fixtures.torus_one(),
                fixtures.klein_one(), fixtures.torus_weave2(), fixtures.nonorient_weave(),
                fixtures.add_kink(fixtures.trefoil(), 1), fixtures.add_kink(fixtures.nonorient_weave(), 1)]

    def test_sides_match_the_refined_map(self):
        for diagram in self.cases():
            m = diagram.map
            for candidate in primecheck.enumerate_two_cuts(diagram):
                expected = oracles.refined_sides(m, candidate.realized)
                self.assertIsNotNone(expected)
                cut = maps.cut_along_curve(m, candidate.realized)
                got = sorted(((s.euler_char, s.vertices) for s in cut.sides), key=lambda s: (s[0], sorted(s[1])))
                self.assertEqual(got, expected)
                self.assertEqual(cut.separates, len(expected) == 2)

    def test_sides_partition_the_surface(self):
        for diagram in self.cases():
            m = diagram.map
            chi = maps.surface_info(m).euler_char
            for candidate in primecheck.enumerate_two_cuts(diagram):
                cut = maps.cut_along_curve(m, candidate.realized)
                self.assertEqual(sum(s.euler_char for s in cut.sides), chi)
                vertices = [v for s in cut.sides for v in s.vertices]
                self.assertEqual(sorted(vertices), list(range(m.vertex_count)))

    def test_sphere_cuts_give_two_disks(self):
        for diagram in (fixtures.granny(), fixtures.figure_eight(), fixtures.two_braid(4),
                        fixtures.add_kink(fixtures.trefoil(), 1)):
            for candidate in primecheck.enumerate_two_cuts(diagram):
                cut = maps.cut_along_curve(diagram.map, candidate.realized)
                self.assertTrue(cut.separates)
                self.assertEqual([s.euler_char for s in cut.sides], [1, 1])

    def test_refinement_rejects_a_touching_curve(self):
        m = fixtures.torus_weave2().map
        drawn = EmbeddedCurve((EdgePoint(1), EdgePoint(2)), (FaceArc(0, 0, 1), FaceArc(1, 3, 0)))
        self.assertEqual(sum(chi for chi, _ in oracles.refined_sides(m, drawn)), 0)
        touching = EmbeddedCurve((EdgePoint(1), EdgePoint(2)), (FaceArc(0, 0, 1), FaceArc(0, 1, 0)))
        self.assertIsNone(oracles.refined_sides(m, touching))


class TestDoubleCover(unittest.TestCase):
    def test_klein_cover_is_torus(self):
        base = fixtures.klein_one().map
        cover, projection = maps.orientable_double_cover(base)
        info = maps.surface_info(cover)
        self.assertEqual((info.euler_char, info.orientable, info.components), (0, True, 1))
        self.assertEqual(cover.vertex_count, 2 * base.vertex_count)
        self.assertEqual(cover.edge_count, 2 * base.edge_count)
        self.assertEqual(len(cover.darts), 2 * len(base.darts))
        self.assertEqual(sorted(f.degree for f in maps.trace_faces(cover)), [4, 4])

    def test_orientable_base_gives_two_copies(self):
        base = fixtures.trefoil().map
        cover, _ = maps.orientable_double_cover(base)
        info = maps.surface_info(cover)
        self.assertEqual((info.euler_char, info.components), (4, 2))
        self.assertTrue(info.orientable)

    def test_deck_involution_is_automorphism(self):
        base = fixtures.nonorient_weave().map
        cover, projection = maps.orientable_double_cover(base)
        for x in cover.darts:
            self.assertEqual(projection[x], projection[x ^ 1])
            self.assertEqual(cover.alpha(x) ^ 1, cover.alpha(x ^ 1))
            self.assertEqual(projection[cover.alpha(x)], base.alpha(projection[x]))
        self.assertTrue(all(cover.sign(x) == 1 for x in cover.darts))

    def test_deck_involution_reverses_the_rotation(self):
        for diagram in (fixtures.klein_one(), fixtures.nonorient_weave(), fixtures.trefoil()):
            base = diagram.map
            cover, projection = maps.orientable_double_cover(base)
            for x in cover.darts:
                self.assertEqual(cover.succ(x) ^ 1, cover.pred(x ^ 1))
                self.assertNotEqual(cover.vertex(x), cover.vertex(x ^ 1))
                self.assertIn(projection[cover.succ(x)], (base.succ(projection[x]), base.pred(projection[x])))

    def test_cover_doubles_euler_characteristic(self):
        for diagram in (fixtures.klein_one(), fixtures.nonorient_weave(), fixtures.granny()):
            base = maps.surface_info(diagram.map)
            cover = maps.surface_info(maps.orientable_double_cover(diagram.map)[0])
            self.assertEqual(cover.euler_char, 2 * base.euler_char)


if __name__ == "__main__":
    unittest.main()
