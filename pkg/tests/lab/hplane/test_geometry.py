import numpy as np
from unittest import TestCase

from wp.lab.laberror import DomainError, NotHyperbolic, SharedEndpoint
from wp.lab.hplane import *  # noqa: F403


class TestGeometry(TestCase):
    def test_uhpoint(self):
        z = UHPoint.from_polar(2.0, np.pi / 2)  # noqa: F405
        self.assertAlmostEqual(z.x, 0.0)
        self.assertAlmostEqual(z.y, 2.0)
        self.assertAlmostEqual(z.r, 2.0)

        with self.assertRaises(DomainError):
            UHPoint(0.0, 0.0)  # noqa: F405
        with self.assertRaises(DomainError):
            UHPoint(np.nan, 1.0)  # noqa: F405
        with self.assertRaises(DomainError):
            UHPoint.from_polar(1.0, np.pi)  # noqa: F405

    def test_dist(self):
        z, w = UHPoint(0.0, 1.0), UHPoint(0.0, np.e)  # noqa: F405
        self.assertAlmostEqual(dist(z, w), 1.0, places=12)  # noqa: F405
        self.assertAlmostEqual(dist(z, z), 0.0)  # noqa: F405

        m = MoebiusMap(2.0, 1.0, 3.0, 2.0)  # noqa: F405
        a, b = UHPoint(0.3, 0.7), UHPoint(-1.2, 2.5)  # noqa: F405
        self.assertAlmostEqual(dist(a, b), dist(apply(m, a), apply(m, b)), places=10)  # noqa: F405

    def test_dist_to_imaginary_axis(self):
        for theta in [0.1, 0.5, np.pi / 2, 2.0, 3.0]:
            z = UHPoint.from_polar(1.7, theta)  # noqa: F405
            expected = np.log(abs(1 / np.sin(theta) + abs(1 / np.tan(theta))))
            self.assertAlmostEqual(dist_to_imaginary_axis(z), expected, places=10)  # noqa: F405

        self.assertEqual(dist_to_imaginary_axis(UHPoint(0.0, 3.0)), 0.0)  # noqa: F405

        # Scaling invariance
        z = UHPoint(0.4, 0.2)  # noqa: F405
        self.assertAlmostEqual(dist_to_imaginary_axis(z),  # noqa: F405
                               dist_to_imaginary_axis(UHPoint(4.0, 2.0)), places=12)  # noqa: F405

    def test_dist_to_axis_slab(self):
        length, depth = 2.0, 1.0

        # Inside the slab
        z = UHPoint.from_polar(np.exp(length / 2), np.pi / 3)  # noqa: F405
        self.assertEqual(float(dist_to_axis_slab_xy(z.x, z.y, length, depth)), 0.0)  # noqa: F405

        # Straight above or below the slab the bound is the exact distance
        for h in [0.5, 1.0, 2.0]:
            above = dist_to_axis_slab_xy(0.0, np.exp(length + h), length, depth)  # noqa: F405
            below = dist_to_axis_slab_xy(0.0, np.exp(-h), length, depth)  # noqa: F405
            self.assertAlmostEqual(float(above), h, places=12)
            self.assertAlmostEqual(float(below), h, places=12)

        # Beside the slab at distance d from the axis
        for d in [1.5, 3.0]:
            z = UHPoint.from_polar(np.exp(length / 2), np.arcsin(1 / np.cosh(d)))  # noqa: F405
            self.assertAlmostEqual(float(dist_to_axis_slab_xy(z.x, z.y, length, depth)), d - depth, places=10)  # noqa: E501,F405

        # Lower bound of the distance to a point of the slab
        rng = np.random.default_rng(11)
        x, y = rng.uniform(-5, 5, size=50), np.exp(rng.uniform(-3, 5, size=50))
        bound = dist_to_axis_slab_xy(x, y, length, depth)  # noqa: F405
        target = UHPoint(0.0, np.exp(length / 2))  # noqa: F405
        for xi, yi, b in zip(x, y, bound):
            self.assertLessEqual(b, dist(UHPoint(xi, yi), target) + 1e-12)  # noqa: F405

    def test_sandwich(self):
        rng = np.random.default_rng(1)
        for _ in range(200):
            z = UHPoint.from_polar(np.exp(rng.uniform(-2, 2)), rng.uniform(0.01, np.pi - 0.01))  # noqa: F405
            d = dist_to_imaginary_axis(z)  # noqa: F405
            s = np.sin(z.theta)**2
            self.assertLessEqual(np.exp(-2 * d), s * (1 + 1e-12))
            self.assertLessEqual(s, 4 * np.exp(-2 * d) * (1 + 1e-12))

    def test_geodesic_u_crossing(self):
        # The unit circle meets the imaginary axis at a right angle
        tag, u = geodesic_u(GeodesicLine(-1.0, 1.0), GeodesicLine.imaginary_axis())  # noqa: F405
        self.assertEqual(tag, CROSSING)  # noqa: F405
        self.assertAlmostEqual(u, 0.0, places=12)

    def test_geodesic_u_disjoint(self):
        # Lines (1, 2) and (-2, -1) against the imaginary axis: distance from cross ratio
        tag, u = geodesic_u(GeodesicLine(1.0, 4.0), GeodesicLine(-4.0, -1.0))  # noqa: F405
        self.assertEqual(tag, DISJOINT)  # noqa: F405
        self.assertGreater(u, 1.0)
        self.assertAlmostEqual(line_distance(GeodesicLine(1.0, 4.0), GeodesicLine(-4.0, -1.0)),  # noqa: F405
                               float(np.arccosh(u)))

    def test_geodesic_u_perpendicular_distance(self):
        # Images of the imaginary axis under e^s z are the same line, under a
        # translation along the unit circle the distance is the translation length
        line = GeodesicLine.imaginary_axis()  # noqa: F405
        m = MoebiusMap.unit_circle_translation(1.3)  # noqa: F405
        image = line.image(m)
        self.assertAlmostEqual(line_distance(line, image), 1.3, places=9)  # noqa: F405

    def test_geodesic_u_shared_endpoint(self):
        with self.assertRaises(SharedEndpoint):
            geodesic_u(GeodesicLine(0.0, 1.0), GeodesicLine(1.0, 2.0))  # noqa: F405
        with self.assertRaises(SharedEndpoint):
            geodesic_u(GeodesicLine(0.0, np.inf), GeodesicLine(1.0, np.inf))  # noqa: F405

    def test_translation_length(self):
        m = MoebiusMap.scaling(2.5)  # noqa: F405
        self.assertAlmostEqual(translation_length(m), 2.5, places=12)  # noqa: F405

        rep, att = fixed_points(m)  # noqa: F405
        self.assertEqual(rep, 0.0)
        self.assertTrue(np.isinf(att))

        with self.assertRaises(NotHyperbolic):
            translation_length(MoebiusMap(1.0, 1.0, 0.0, 1.0))  # noqa: F405
        with self.assertRaises(NotHyperbolic):
            fixed_points(MoebiusMap(0.0, -1.0, 1.0, 0.0))  # noqa: F405

    def test_fixed_points_attracting(self):
        m = MoebiusMap.unit_circle_translation(1.0)  # noqa: F405
        rep, att = fixed_points(m)  # noqa: F405
        self.assertAlmostEqual(rep, -1.0)
        self.assertAlmostEqual(att, 1.0)

    def test_axis_frame(self):
        m = MoebiusMap(2.0, 1.0, 3.0, 2.0)  # noqa: F405
        n = axis_frame(m)  # noqa: F405
        k = n.inverse() @ m @ n
        # Conjugated map is a pure scaling along the imaginary axis
        self.assertAlmostEqual(k.b, 0.0, places=9)
        self.assertAlmostEqual(k.c, 0.0, places=9)
        self.assertGreater(abs(k.a), abs(k.d))

    def test_dist_to_geodesic(self):
        line = GeodesicLine(-1.0, 1.0)  # noqa: F405
        self.assertAlmostEqual(dist_to_geodesic(UHPoint(0.0, 1.0), line), 0.0, places=12)  # noqa: F405
        self.assertAlmostEqual(dist_to_geodesic(UHPoint(0.0, np.e), line), 1.0, places=10)  # noqa: F405

    def test_moebius_to_axis(self):
        m = moebius_to_axis(GeodesicLine(-1.0, 2.0))  # noqa: F405
        self.assertAlmostEqual(m.boundary_image(0.0), -1.0, places=12)
        self.assertAlmostEqual(m.boundary_image(np.inf), 2.0, places=12)

    def test_moebius(self):
        m = MoebiusMap(2.0, 0.0, 0.0, 2.0)  # noqa: F405
        self.assertAlmostEqual(m.a * m.d - m.b * m.c, 1.0)

        with self.assertRaises(DomainError):
            MoebiusMap(1.0, 0.0, 0.0, -1.0)  # noqa: F405

        p = MoebiusMap(2.0, 1.0, 3.0, 2.0)  # noqa: F405
        self.assertTrue((p @ p.inverse()).equals(MoebiusMap.identity()))  # noqa: F405
        self.assertTrue(p.power(-2).equals(p.inverse() @ p.inverse()))
        self.assertTrue(p.equals(MoebiusMap(-2.0, -1.0, -3.0, -2.0)))  # noqa: F405

    def test_geodesic_line(self):
        line = GeodesicLine(3.0, 1.0)  # noqa: F405
        self.assertEqual(line.endpoints, (1.0, 3.0))

        line = GeodesicLine(np.inf, 2.0)  # noqa: F405
        self.assertTrue(line.is_vertical)
        self.assertEqual(line.p, 2.0)

        with self.assertRaises(DomainError):
            GeodesicLine(1.0, 1.0)  # noqa: F405
        with self.assertRaises(DomainError):
            GeodesicLine(np.inf, np.inf)  # noqa: F405
