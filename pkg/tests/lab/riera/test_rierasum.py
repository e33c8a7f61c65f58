import numpy as np
from unittest import TestCase

from wp.lab.laberror import BudgetExceeded, TailNotConvergent
from wp.lab.config import RieraConfig
from wp.lab.fuchsian import FNCoordinates, build_group
from wp.lab.riera import *  # noqa: F403
from wp.lab.riera.tailestimate import estimate_tail, MAX_BALL_RADIUS


class TestRieraSum(TestCase):
    def get_test_group(self):
        fn = FNCoordinates.genus2((2.0, 2.5, 1.8), (0.3, -0.4, 0.7))
        return build_group(fn)

    def test_double_cosets(self):
        grp = self.get_test_group()
        alpha = grp.geodesic_class('a')
        terms = double_cosets(grp, alpha, 4.0)  # noqa: F405

        self.assertGreater(len(terms), 0)
        distances = [t.distance for t in terms]
        self.assertEqual(distances, sorted(distances))
        self.assertTrue(all(d <= 4.0 for d in distances))

        # Lifts of a simple closed geodesic never cross its axis
        self.assertTrue(all(not t.crossing for t in terms))
        self.assertTrue(all(t.term_value > 0 for t in terms))
        self.assertTrue(all(1.0 <= t.radial < np.exp(alpha.length) for t in terms))

    def test_lift_separation(self):
        grp = self.get_test_group()
        alpha = grp.geodesic_class('a')
        d = min_lift_separation(grp, alpha, 4.0)  # noqa: F405
        # Collar width of a simple closed geodesic
        self.assertGreaterEqual(d, 2 * np.arcsinh(1 / np.sinh(alpha.length / 2)) - 1e-9)

    def test_norm_lower_bound(self):
        grp = self.get_test_group()
        alpha = grp.geodesic_class('c')
        result = grad_norm_sq(grp, alpha, radius=4.0)  # noqa: F405

        self.assertEqual(result.diagonal, alpha.length)
        self.assertGreaterEqual(result.lo, 2 / np.pi * alpha.length)
        self.assertLessEqual(result.lo, result.hi)
        self.assertEqual(result.value_interval, (result.lo, result.hi))
        self.assertGreaterEqual(lower_bound_ratio(result, alpha.length), 2 / np.pi)  # noqa: F405

    def test_symmetry(self):
        grp = self.get_test_group()
        a, c = grp.geodesic_class('a'), grp.geodesic_class('c')
        ac = evaluate_pairing(grp, a, c, 4.0)  # noqa: F405
        ca = evaluate_pairing(grp, c, a, 4.0)  # noqa: F405

        self.assertEqual(ac.diagonal, 0.0)
        self.assertEqual(ac.terms_used, ca.terms_used)
        self.assertAlmostEqual(ac.partial_sum, ca.partial_sum, places=9)

    def test_adaptive(self):
        grp = self.get_test_group()
        alpha = grp.geodesic_class('a')
        config = RieraConfig()
        config.tolerance = 5e-2
        config.max_radius = 10.0

        result = grad_pairing(grp, alpha, alpha, config=config)  # noqa: F405
        self.assertLessEqual(result.width, 5e-2)
        self.assertGreaterEqual(result.truncation_radius, initial_radius(alpha))  # noqa: F405
        self.assertEqual(result.fitted_constants['tail_model'], 'area')
        self.assertEqual(len(result.history), len(set(h[0] for h in result.history)))
        self.assertEqual(result.history[-1][0], result.truncation_radius)

        d = result.to_dict()
        self.assertEqual(d['alpha'], 'a')
        self.assertEqual(d['R'], result.truncation_radius)

    def test_tail_not_convergent(self):
        grp = self.get_test_group()
        alpha = grp.geodesic_class('a')
        config = RieraConfig()
        config.tolerance = 1e-12
        config.max_radius = initial_radius(alpha)  # noqa: F405

        with self.assertRaises(TailNotConvergent) as cm:
            grad_pairing(grp, alpha, alpha, config=config)  # noqa: F405
        self.assertIsInstance(cm.exception.partial, PairingResult)  # noqa: F405

    def test_budget(self):
        grp = self.get_test_group()
        alpha = grp.geodesic_class('a')
        with self.assertRaises(BudgetExceeded):
            grad_pairing(grp, alpha, alpha, radius=6.0, budget=100)  # noqa: F405

    def test_sqrt_norm(self):
        grp = self.get_test_group()
        alpha = grp.geodesic_class('a')
        sq = grad_norm_sq(grp, alpha, radius=4.0)  # noqa: F405
        rt = grad_sqrt_norm(grp, alpha, radius=4.0)  # noqa: F405
        factor = 1 / (2 * np.sqrt(alpha.length))
        self.assertAlmostEqual(rt.lo, factor * np.sqrt(sq.lo))
        self.assertAlmostEqual(rt.hi, factor * np.sqrt(sq.hi))

    def test_separating_self_pairing(self):
        grp = build_group(FNCoordinates.genus2((2.0, 2.0, 2.0)))
        alpha = grp.geodesic_class('abAB')

        lifts = compute_lifts(grp, alpha, alpha, 4.0)  # noqa: F405
        self.assertTrue(lifts.coincident)
        self.assertTrue(lifts.complete)
        self.assertTrue(all(not t.crossing for t in lifts.terms))
        self.assertTrue(all(t.distance > 1e-6 for t in lifts.terms))

        result = grad_norm_sq(grp, alpha, radius=4.0)  # noqa: F405
        self.assertEqual(result.diagonal, alpha.length)
        self.assertGreaterEqual(result.lo, 2 / np.pi * alpha.length)
        self.assertEqual(result.warnings, [])

    def test_c2_bound(self):
        grp = self.get_test_group()
        alpha = grp.geodesic_class('a')
        terms = [t for t in double_cosets(grp, alpha, 6.0) if not t.crossing]  # noqa: F405
        u_min = min(t.u for t in terms)
        c2 = fit_c2([], u_min)  # noqa: F405
        for t in terms:
            self.assertLessEqual(t.term_value, c2 / t.u**2 * (1 + 1e-12))

    def test_schedule_monotone(self):
        grp = self.get_test_group()
        alpha = grp.geodesic_class('a')
        results = [evaluate_pairing(grp, alpha, alpha, radius) for radius in (3.0, 4.0, 5.0)]  # noqa: F405

        partials = [r.partial_sum for r in results]
        tails = [r.tail_estimate for r in results]
        self.assertTrue(np.all(np.diff(partials) >= 0))
        self.assertTrue(np.all(np.diff(tails) <= 0))
        self.assertEqual([r.terms_used for r in results], sorted(r.terms_used for r in results))

    def test_mixed_pairings(self):
        grp = build_group(FNCoordinates.genus2((2.0, 2.0, 2.0)))
        a, s = grp.geodesic_class('a'), grp.geodesic_class('abAB')

        fixed_as = evaluate_pairing(grp, a, s, 5.0)  # noqa: F405
        fixed_sa = evaluate_pairing(grp, s, a, 5.0)  # noqa: F405
        self.assertEqual(fixed_as.terms_used, fixed_sa.terms_used)
        self.assertAlmostEqual(fixed_as.partial_sum, fixed_sa.partial_sum, places=9)

        config = RieraConfig()
        config.tolerance = 1e-2
        as_ = grad_pairing(grp, a, s, config=config)  # noqa: F405
        sa = grad_pairing(grp, s, a, config=config)  # noqa: F405
        self.assertLessEqual(as_.width, 1e-2)
        self.assertLessEqual(sa.width, 1e-2)
        self.assertLessEqual(max(as_.lo, sa.lo), min(as_.hi, sa.hi))

    def test_width_tolerance(self):
        grp = build_group(FNCoordinates.genus2((2.0, 2.0, 2.0)))
        alpha = grp.geodesic_class('a')
        config = RieraConfig()
        config.tolerance = 1e-4

        result = grad_norm_sq(grp, alpha, config=config)  # noqa: F405
        self.assertLess(result.width, 1e-4)
        self.assertLessEqual(result.truncation_radius, config.max_radius)
        partials = [h[1] for h in result.history]
        self.assertTrue(np.all(np.diff(partials) >= 0))


class TestTailEstimate(TestCase):
    def test_counting_tail(self):
        t4 = counting_tail(4.0, 1.0)  # noqa: F405
        t8 = counting_tail(8.0, 1.0)  # noqa: F405
        self.assertGreater(t4, t8)
        self.assertGreater(t8, 0)
        self.assertAlmostEqual(counting_tail(4.0, 2.0), 2 * t4)  # noqa: F405

    def test_area_tail_integral(self):
        for depth, length in [(0.5, 1.0), (1.5, 2.0), (4.0, 0.3)]:
            self.assertAlmostEqual(area_tail_integral(depth, length) / area_tail_integral_numeric(depth, length),  # noqa: E501,F405
                                   1.0, places=6)

    def test_area_tail(self):
        self.assertTrue(np.isinf(area_tail(0.05, 1.0, 1.0, 1.0, 0.1)))  # noqa: F405
        self.assertGreater(area_tail(3.0, 1.0, 1.0, 1.0, 0.1), area_tail(5.0, 1.0, 1.0, 1.0, 0.1))  # noqa: E501,F405

        # Exponential decay in the radius
        ratio = area_tail(11.0, 2.0, 1.0, 1.0, 0.5) / area_tail(10.0, 2.0, 1.0, 1.0, 0.5)  # noqa: F405
        self.assertAlmostEqual(ratio, np.exp(-1.0), places=6)

    def test_tail_nonincreasing(self):
        config = RieraConfig()
        tails = [estimate_tail('area', [], radius, 2.0, config, beta_length=2.0).value
                 for radius in np.arange(3.0, 12.5, 0.5)]
        self.assertTrue(np.all(np.diff(tails) <= 0))
        self.assertLess(2 / np.pi * tails[-1], 1e-4)

        estimate = estimate_tail('area', [], 6.0, 2.0, config, beta_length=2.0)
        self.assertAlmostEqual(estimate.constants['r'], collar_half_width(2.0))  # noqa: F405
        self.assertTrue(estimate.constants['fitted'])

        short = estimate_tail('area', [], 6.0, 0.1, config, beta_length=0.1)
        self.assertEqual(short.constants['r'], MAX_BALL_RADIUS)
        config.ball_radius = 0.25
        self.assertEqual(estimate_tail('area', [], 6.0, 0.1, config, beta_length=0.1).constants['r'], 0.25)

    def test_collar_half_width(self):
        self.assertAlmostEqual(collar_half_width(2 * np.arcsinh(1.0)), np.arcsinh(1.0))  # noqa: F405
        self.assertGreater(collar_half_width(0.1), collar_half_width(1.0))  # noqa: F405

    def test_fit_c2(self):
        self.assertGreaterEqual(fit_c2([], 1.5), 2 / 3)  # noqa: F405
        self.assertAlmostEqual(fit_c2([], 1.5), f_term(1.5) * 1.5**2)  # noqa: F405
        self.assertGreater(fit_c2([], 1.5), fit_c2([], 3.0))  # noqa: F405

    def test_gl_qi_constant(self):
        d = gl_qi_constant(0.5, c2=1.0, c_r=1.0)  # noqa: F405
        self.assertAlmostEqual(d, 2 / np.pi * (1 + 3 * np.pi))
        self.assertAlmostEqual(lipschitz_constant(d), np.sqrt(d) / 2)  # noqa: F405

    def test_tail_models(self):
        self.assertEqual(TAIL_MODELS, ['area', 'counting'])  # noqa: F405
        with self.assertRaises(ValueError):
            estimate_tail('poisson', [], 4.0, 1.0, RieraConfig())
