"""Unit tests for Herbrand's criterion."""

import unittest

from sympy import primerange

from cubictk.errors import HypothesisError, InputError
from cubictk.model.cyclotomic.class_group import IdealClass, class_group
from cubictk.model.stickelberger.eigen import EigenComponent, EigenDecomp, eigen_decompose
from cubictk.model.stickelberger.herbrand import herbrand_consistent, herbrand_index, herbrand_test


class HerbrandTest(unittest.TestCase):
    """Unit tests for the Herbrand test."""

    def test_irregular_pair(self):
        """Test that 37 divides the numerator of B_32."""
        self.assertTrue(herbrand_test(37, 32))

    def test_regular_pair(self):
        """Test that 37 does not divide the numerator of B_30."""
        self.assertFalse(herbrand_test(37, 30))

    def test_b2(self):
        """Test that B_2 = 1/6 is never divisible by r."""
        for r in primerange(5, 100):
            self.assertFalse(herbrand_test(r, 2))

    def test_range(self):
        """Test that r must be a prime ≥ 5 and k even with 2 ≤ k ≤ r − 3."""
        self.assertRaises(HypothesisError, herbrand_test, 3, 2)
        self.assertRaises(HypothesisError, herbrand_test, 37, 31)
        self.assertRaises(HypothesisError, herbrand_test, 37, 36)
        self.assertRaises(HypothesisError, herbrand_test, 37, 0)
        self.assertRaises(InputError, herbrand_test, 39, 2)


class HerbrandIndexTest(unittest.TestCase):
    """Unit tests for the Bernoulli index belonging to an eigenspace."""

    def test_index(self):
        """Test that ω^j = ω^(1−k) for k = r − j."""
        self.assertEqual(12, herbrand_index(23, 11))
        self.assertEqual(2, herbrand_index(23, 21))
        self.assertEqual(32, herbrand_index(37, 5))

    def test_outside_range(self):
        """Test that even j and j = 1 are outside the range of Herbrand's theorem."""
        self.assertIsNone(herbrand_index(23, 2))
        self.assertIsNone(herbrand_index(23, 1))


class HerbrandConsistentTest(unittest.TestCase):
    """Unit tests for checking eigenspaces against Bernoulli numbers."""

    @staticmethod
    def decomposition(j: int) -> EigenDecomp:
        """Return a 37-part of order 37 concentrated in C_j."""
        generator = IdealClass((37,), (1,))
        return EigenDecomp(37, 37, (EigenComponent(j, 1, (generator,), 37, 37),))

    def test_consistent(self):
        """Test that C_5 may be nonzero for r = 37 because 37 | B_32."""
        self.assertTrue(herbrand_consistent(37, self.decomposition(5)))

    def test_inconsistent(self):
        """Test that C_7 must vanish for r = 37 because 37 ∤ B_30."""
        self.assertFalse(herbrand_consistent(37, self.decomposition(7)))

    def test_trivial(self):
        """Test that a trivial r-part is consistent."""
        self.assertTrue(herbrand_consistent(5, eigen_decompose(class_group(5), 5)))

    def test_wrong_prime(self):
        """Test that only the r-part is subject to Herbrand's theorem."""
        self.assertRaises(HypothesisError, herbrand_consistent, 23, eigen_decompose(class_group(23), 3))
