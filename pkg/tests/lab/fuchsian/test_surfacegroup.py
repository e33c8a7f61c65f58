import numpy as np
from unittest import TestCase

from wp.lab.laberror import BudgetExceeded
from wp.lab.hplane import MoebiusMap, UHPoint, apply, axis_frame, dist_to_axis_slab_xy, dist_to_imaginary_axis
from wp.lab.fuchsian import *  # noqa: F403


class TestSurfaceGroup(TestCase):
    def get_test_fn(self):
        return FNCoordinates.genus2((2.0, 2.5, 1.8), (0.3, -0.4, 0.7))  # noqa: F405

    def test_torus_piece(self):
        a, b = torus_piece(1.5, 0.2, 2.0)  # noqa: F405
        k = commutator(a, b)  # noqa: F405
        self.assertAlmostEqual(k.trace, -2 * np.cosh(1.0), places=9)

        a, b = torus_piece(1.5, 0.0, 0.0)  # noqa: F405
        self.assertAlmostEqual(commutator(a, b).trace, -2.0, places=9)  # noqa: F405

    def test_build_genus2(self):
        fn = self.get_test_fn()
        grp = build_group(fn)  # noqa: F405

        self.assertLess(grp.relation_residual, 1e-9)
        for i, l in enumerate(fn.lengths):
            self.assertAlmostEqual(grp.word_length(grp.pants_curve_words[i]), l, places=9)
        self.assertTrue(np.isfinite(grp.base_domain_radius))
        self.assertTrue(grp.certified)

        # Gauss-Bonnet area of a closed genus two surface
        self.assertTrue(grp.domain.is_complete())
        self.assertEqual(grp.domain.ideal_vertices, 0)
        self.assertAlmostEqual(grp.domain.area, 4 * np.pi, places=4)

        relator = grp.evaluate('abABcdCD')
        self.assertLess(relator.distance(MoebiusMap.identity()), 1e-9)

    def test_build_without_domain(self):
        grp = build_group(self.get_test_fn(), with_domain=False)  # noqa: F405
        self.assertIsNone(grp.domain)
        self.assertTrue(np.isinf(grp.base_domain_radius))

    def test_build_punctured_torus(self):
        fn = FNCoordinates.punctured_torus(1.5, 0.3)  # noqa: F405
        grp = build_group(fn, with_domain=False)  # noqa: F405
        self.assertLess(grp.relation_residual, 1e-9)
        self.assertAlmostEqual(grp.word_length('a'), 1.5, places=9)
        self.assertAlmostEqual(abs(grp.evaluate('abAB').trace + 2), 0.0, places=9)

    def test_enumerate_elements(self):
        grp = build_group(self.get_test_fn())  # noqa: F405
        elements = grp.enumerate_elements(3.0)
        self.assertGreater(elements.count, 1)
        self.assertEqual(elements.word(0), '')

        # Every word spells its own matrix
        for i in range(1, min(elements.count, 30)):
            m = grp.evaluate(elements.word(i))
            self.assertTrue(m.equals(elements.matrix(i), tol=1e-7))

    def test_budget(self):
        grp = build_group(self.get_test_fn())  # noqa: F405
        with self.assertRaises(BudgetExceeded) as cm:
            grp.enumerate_elements(8.0, budget=50)
        self.assertIsNotNone(cm.exception.partial)


class TestClassEnumerator(TestCase):
    def get_test_fn(self):
        return FNCoordinates.genus2((2.0, 2.5, 1.8), (0.3, -0.4, 0.7))  # noqa: F405

    def test_enumerate_classes(self):
        fn = self.get_test_fn()
        grp = build_group(fn)  # noqa: F405
        classes = enumerate_classes(grp, 3.0)  # noqa: F405

        lengths = [c.length for c in classes]
        self.assertEqual(lengths, sorted(lengths))
        self.assertTrue(all(l <= 3.0 + 1e-7 for l in lengths))  # noqa: E741

        # All pants curves below the cutoff are found
        for i, l in enumerate(fn.lengths):
            self.assertIsNotNone(pants_curve_index(grp, grp.geodesic_class(grp.pants_curve_words[i])))  # noqa: E501,F405
            self.assertTrue(any(abs(c.length - l) < 1e-9 for c in classes))

        # No two classes are conjugate
        for i, c in enumerate(classes):
            for d in classes[i + 1:]:
                if abs(c.length - d.length) < 1e-7:
                    self.assertFalse(is_conjugate(grp, c.matrix, d.matrix))  # noqa: F405

    def test_enumerate_empty(self):
        grp = build_group(self.get_test_fn())  # noqa: F405
        self.assertEqual(enumerate_classes(grp, 0.0), [])  # noqa: F405

    def test_systole(self):
        fn = self.get_test_fn()
        grp = build_group(fn)  # noqa: F405
        length, systolic = systole(fn, grp=grp)  # noqa: F405

        self.assertLessEqual(length, min(fn.lengths) + 1e-7)
        self.assertGreater(len(systolic), 0)
        self.assertTrue(all(abs(c.length - length) <= 1e-7 for c in systolic))

    def test_naive_systole(self):
        fn = self.get_test_fn()
        grp = build_group(fn)  # noqa: F405
        length, systolic = systole(fn, grp=grp)  # noqa: F405
        naive_length, naive_words = naive_systole(grp, 4)  # noqa: F405

        self.assertAlmostEqual(length, naive_length, places=9)
        self.assertEqual(len(naive_words), len(systolic))
        for w in naive_words:
            g = grp.evaluate(w)
            self.assertTrue(any(is_conjugate(grp, g, c.matrix) for c in systolic))  # noqa: F405
            self.assertTrue(any(same_axis_class(grp, g, c.matrix, 4) for c in systolic))  # noqa: F405

    def test_twist_invariance(self):
        fn = self.get_test_fn()
        length, _ = systole(fn)  # noqa: F405
        for i in range(3):
            twisted, _ = systole(dehn_twist(fn, i))  # noqa: F405
            self.assertAlmostEqual(length, twisted, places=9)

    def test_is_conjugate(self):
        grp = build_group(self.get_test_fn())  # noqa: F405
        a = grp.evaluate('a')
        self.assertTrue(is_conjugate(grp, a, grp.evaluate('baB')))  # noqa: F405
        self.assertTrue(is_conjugate(grp, a, a.inverse()))  # noqa: F405
        self.assertFalse(is_conjugate(grp, a, grp.evaluate('c')))  # noqa: F405

    def test_same_axis_class(self):
        grp = build_group(FNCoordinates.genus2((2.0, 2.0, 2.0)), with_domain=False)  # noqa: F405
        a = grp.evaluate('a')
        self.assertTrue(same_axis_class(grp, a, grp.evaluate('baB'), 2))  # noqa: F405
        self.assertTrue(same_axis_class(grp, a, a.inverse(), 0))  # noqa: F405

        # Same length, different class
        self.assertFalse(same_axis_class(grp, a, grp.evaluate('c'), 3))  # noqa: F405
        self.assertFalse(same_axis_class(grp, a, grp.evaluate('b'), 3))  # noqa: F405

    def test_axis_angles(self):
        # Translation along the unit circle, fixed points 1 and -1
        m = np.array([[np.cosh(0.5), np.sinh(0.5)], [np.sinh(0.5), np.cosh(0.5)]])
        p, q = sorted(axis_angles(m[None, :, :])[0])  # noqa: F405
        self.assertAlmostEqual(p, np.pi / 2)
        self.assertAlmostEqual(q, 3 * np.pi / 2)

    def test_enumerate_slab(self):
        grp = build_group(self.get_test_fn())  # noqa: F405
        alpha = grp.geodesic_class('a')
        frame = axis_frame(alpha.matrix, through=UHPoint(0.0, 1.0))
        tiles = grp.enumerate_slab(alpha.length, 2.0, frame)
        self.assertEqual(tiles.word(0), '')

        # Every kept translate of the domain center is close to the slab
        center = apply(frame.inverse(), UHPoint(0.0, 1.0)).z
        k = tiles.mats
        z = (k[:, 0, 0] * center + k[:, 0, 1]) / (k[:, 1, 0] * center + k[:, 1, 1])
        bound = dist_to_axis_slab_xy(z.real, z.imag, alpha.length, 2.0)
        offset = max(dist_to_imaginary_axis(UHPoint.from_complex(center)) - 2.0, 0.0)
        self.assertTrue(np.all(bound <= grp.base_domain_radius + offset + 1e-6))

        # The slab is covered: the tile holding i e^(l/2) is among the translates
        p = np.exp(alpha.length / 2) * 1j
        dist_to_center = 2 * np.arcsinh(np.abs(z - p) / (2 * np.sqrt(z.imag * p.imag)))
        self.assertLessEqual(np.min(dist_to_center), grp.base_domain_radius + 1e-9)

        with self.assertRaises(BudgetExceeded):
            grp.enumerate_slab(alpha.length, 6.0, frame, budget=50)

    def test_canonical_cyclic_word(self):
        self.assertEqual(canonical_cyclic_word('ba'), canonical_cyclic_word('ab'))  # noqa: F405
        self.assertEqual(canonical_cyclic_word('BA'), canonical_cyclic_word('ab'))  # noqa: F405
        self.assertEqual(canonical_cyclic_word('cabC'), canonical_cyclic_word('ab'))  # noqa: F405

    def test_reduced_words(self):
        grp = build_group(self.get_test_fn(), with_domain=False)  # noqa: F405
        words, mats = reduced_words(grp, 3)  # noqa: F405
        self.assertEqual(len(words), 8 + 8 * 7 + 8 * 7 * 7)
        self.assertEqual(mats.shape, (len(words), 2, 2))
        for w in words:
            self.assertEqual(free_reduce(w), w)  # noqa: F405


class TestSampling(TestCase):
    def test_random_thick_fn(self):
        rng = np.random.default_rng(7)
        fn, length = random_thick_fn(Topology.genus2(), rng)  # noqa: F405
        self.assertGreaterEqual(length, 0.5)
        self.assertEqual(len(fn.lengths), 3)
        for l, t in zip(fn.lengths, fn.twists):  # noqa: E741
            self.assertGreaterEqual(t, 0.0)
            self.assertLessEqual(t, l)
