import numpy as np
from unittest import TestCase

from wp.lab.laberror import DomainError, NonPositiveLength
from wp.lab.fuchsian import Topology, FNCoordinates, PUNCTURE, dehn_twist
from wp.lab.fuchsian import free_reduce, cyclic_reduce, invert_word


class TestTopology(TestCase):
    def test_genus2(self):
        t = Topology.genus2()
        self.assertEqual(t.curve_count, 3)
        self.assertEqual(t.dimension, 6)
        self.assertAlmostEqual(t.area, 4 * np.pi)
        self.assertTrue(t.is_closed)
        self.assertTrue(t.is_supported)

    def test_punctured_torus(self):
        t = Topology.punctured_torus()
        self.assertEqual(t.curve_count, 1)
        self.assertEqual(t.dimension, 2)
        self.assertFalse(t.is_closed)

    def test_invalid(self):
        with self.assertRaises(DomainError):
            Topology(0, 3, ((PUNCTURE, PUNCTURE, PUNCTURE),))
        with self.assertRaises(DomainError):
            Topology(2, 0, ((0, 0, 1), (1, 1, 2)))
        with self.assertRaises(DomainError):
            Topology(2, 0, ((0, 0, 2),))

    def test_to_from_dict(self):
        t = Topology.punctured_torus()
        self.assertEqual(Topology.from_dict(t.to_dict()), t)


class TestFNCoordinates(TestCase):
    def test_validation(self):
        with self.assertRaises(NonPositiveLength):
            FNCoordinates.genus2((1.0, 0.0, 1.0))
        with self.assertRaises(DomainError):
            FNCoordinates.genus2((1.0, 1.0))
        with self.assertRaises(DomainError):
            FNCoordinates.genus2((1.0, np.inf, 1.0))

    def test_from_dict(self):
        fn = FNCoordinates.from_dict(dict(genus=2, punctures=0, lengths=[1.0, 2.0, 3.0]))
        self.assertEqual(fn.twists, (0.0, 0.0, 0.0))
        self.assertEqual(fn.dimension, 6)

        fn = FNCoordinates.from_dict(dict(genus=1, punctures=1, lengths=[1.5], twists=[0.2]))
        self.assertEqual(fn.topology, Topology.punctured_torus())

        with self.assertRaises(DomainError):
            FNCoordinates.from_dict(dict(genus=3, punctures=0, lengths=[1.0] * 6))

    def test_vector(self):
        fn = FNCoordinates.genus2((1.0, 2.0, 3.0), (0.1, 0.2, 0.3))
        v = fn.as_vector()
        self.assertEqual(v.tolist(), [1.0, 2.0, 3.0, 0.1, 0.2, 0.3])
        self.assertEqual(FNCoordinates.from_vector(fn.topology, v), fn)

    def test_dehn_twist(self):
        fn = FNCoordinates.genus2((1.0, 2.0, 3.0), (0.1, 0.2, 0.3))
        tw = dehn_twist(fn, 1, times=-2)
        self.assertAlmostEqual(tw.twists[1], 0.2 - 4.0)
        self.assertEqual(tw.lengths, fn.lengths)


class TestWords(TestCase):
    def test_free_reduce(self):
        self.assertEqual(free_reduce('abBAc'), 'c')
        self.assertEqual(free_reduce('aA'), '')

    def test_cyclic_reduce(self):
        self.assertEqual(cyclic_reduce('abcA'), 'bc')
        self.assertEqual(cyclic_reduce('abAB'), 'abAB')

    def test_invert_word(self):
        self.assertEqual(invert_word('abC'), 'cBA')
