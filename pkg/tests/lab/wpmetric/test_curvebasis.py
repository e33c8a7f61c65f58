import numpy as np
from unittest import TestCase

from wp.lab.laberror import NotPositiveDefinite, UnsupportedTopology
from wp.lab.fuchsian import FNCoordinates, Topology
from wp.lab.wpmetric import CurveBasis, length_jacobian, word_lengths, independence_score


class TestCurveBasis(TestCase):
    def get_test_fn(self):
        return FNCoordinates.genus2((2.0, 2.5, 1.8), (0.3, -0.4, 0.7))

    def test_word_lengths(self):
        fn = self.get_test_fn()
        lengths = word_lengths(fn, ['a', 'c', 'abAB'])
        self.assertTrue(np.allclose(lengths, fn.lengths, atol=1e-9))

    def test_length_jacobian(self):
        fn = self.get_test_fn()
        jac = length_jacobian(fn, ['a', 'c'])
        self.assertEqual(jac.shape, (2, 6))
        self.assertAlmostEqual(jac[0, 0], 1.0, places=6)
        self.assertAlmostEqual(jac[1, 1], 1.0, places=6)
        self.assertAlmostEqual(jac[0, 3], 0.0, places=6)

    def test_independence_score(self):
        self.assertAlmostEqual(independence_score(np.diag([3.0, 0.5])), 0.5)

    def test_standard(self):
        fn = self.get_test_fn()
        basis = CurveBasis.standard(fn)
        self.assertEqual(basis.size, 6)
        self.assertEqual(basis.words[:3], ('a', 'c', 'abAB'))
        self.assertGreater(basis.independence_score, 1e-6)
        self.assertEqual(basis.index('c'), 1)

    def test_standard_punctured_torus(self):
        basis = CurveBasis.standard(FNCoordinates.punctured_torus(1.5, 0.3))
        self.assertEqual(basis.words, ('a', 'ab'))

    def test_unsupported(self):
        topology = Topology(0, 4, ((0, None, None), (0, None, None)))
        fn = FNCoordinates(topology, (1.0,), (0.0,))
        with self.assertRaises(UnsupportedTopology):
            CurveBasis.standard(fn)

    def test_from_words(self):
        fn = self.get_test_fn()
        standard = CurveBasis.standard(fn)
        basis = CurveBasis.from_words(fn, list(standard.words))
        self.assertEqual(basis.words, standard.words)

        with self.assertRaises(NotPositiveDefinite):
            CurveBasis.from_words(fn, ['a', 'c', 'abAB'])
        with self.assertRaises(NotPositiveDefinite):
            CurveBasis.from_words(fn, ['a', 'A', 'c', 'abAB', 'ab', 'cd'])

    def test_with_extra(self):
        basis = CurveBasis.standard(self.get_test_fn())
        extra = basis.with_extra('b')
        self.assertEqual(extra.size, 7)
        self.assertEqual(extra.jacobian.shape, (7, 6))
