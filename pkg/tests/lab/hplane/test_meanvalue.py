import numpy as np
from unittest import TestCase

from wp.lab.hplane import UHPoint, axis_eigenfunction, fit_mean_value_constant, mean_value_ratios
from wp.lab.hplane.meanvalue import hyperbolic_laplacian, sample_ball, ball_area, random_points
from wp.lab.hplane.geometry import dist, dist_to_imaginary_axis


class TestMeanValue(TestCase):
    def test_axis_eigenfunction(self):
        def u(x, y):
            return axis_eigenfunction(np.arctan2(y, x))

        for x, y in [(0.3, 1.0), (-1.0, 0.5), (2.0, 3.0)]:
            lap = hyperbolic_laplacian(u, x, y)
            self.assertAlmostEqual(lap / u(x, y), 2.0, places=3)

    def test_sample_ball(self):
        rng = np.random.default_rng(3)
        p = UHPoint(0.5, 2.0)
        x, y = sample_ball(p, 0.8, 500, rng)
        self.assertEqual(x.size, 500)
        for xi, yi in zip(x[:50], y[:50]):
            self.assertLessEqual(dist(p, UHPoint(xi, yi)), 0.8 + 1e-9)

    def test_ball_area(self):
        self.assertAlmostEqual(ball_area(1.0), 2 * np.pi * (np.cosh(1.0) - 1))

    def test_mean_value_ratios(self):
        rng = np.random.default_rng(5)
        points = [UHPoint.from_polar(1.0, t) for t in [0.3, 1.0, np.pi / 2]]
        ratios = mean_value_ratios(1.0, points, rng, samples=2000)
        self.assertEqual(ratios.shape, (3,))
        self.assertTrue(np.all(ratios > 0))

        c = fit_mean_value_constant(1.0, np.random.default_rng(5), count=5, samples=2000)
        self.assertTrue(np.isfinite(c))
        self.assertGreater(c, 0)

    def test_random_points_min_distance(self):
        rng = np.random.default_rng(9)
        points = random_points(50, rng, min_distance=1.0)
        d = np.array([dist_to_imaginary_axis(p) for p in points])
        self.assertTrue(np.all(d >= 1.0 - 1e-9))
        self.assertTrue(np.all(d <= 3.0 + 1e-9))

    def test_mean_value_property(self):
        # A constant fitted on one sample bounds the ratios on a fresh one
        r = 0.5
        c = fit_mean_value_constant(r, np.random.default_rng(0), count=100, samples=4000, min_distance=1.0)
        rng = np.random.default_rng(1)
        ratios = mean_value_ratios(r, random_points(100, rng, min_distance=1.0), rng, samples=4000)

        self.assertEqual(ratios.shape, (100,))
        self.assertGreaterEqual(np.mean(ratios <= 1.05 * c), 0.95)

        # The ratio is at most the inverse ball area times the largest weight ratio over the ball
        self.assertLessEqual(c, np.exp(2 * r) / ball_area(r) * 1.05)
