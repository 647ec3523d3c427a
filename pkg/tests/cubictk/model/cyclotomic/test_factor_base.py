"""Unit tests for factor bases."""

import unittest
from math import prod

from cubictk.errors import InputError
from cubictk.model.cyclotomic.factor_base import FactorBase, default_bound
from cubictk.model.cyclotomic.ideal import PrimeIdeal
from cubictk.model.cyclotomic.integer import CycInt

ZETA5 = CycInt.zeta(5)


class FactorBaseTest(unittest.TestCase):
    """Unit tests for the factor base class."""

    def setUp(self) -> None:
        """Create the factor base of ℤ[ζ_5] with the default bound."""
        self.factor_base = FactorBase(5, default_bound(5))

    def test_default_bound(self):
        """Test the default norm bound max(200, 2r²)."""
        self.assertEqual(200, default_bound(5))
        self.assertEqual(1058, default_bound(23))

    def test_primes(self):
        """Test that the base has λ, the inert primes 2 and 3, and the four primes above each p ≡ 1 mod 5 below 200."""
        self.assertEqual(43, len(self.factor_base))
        self.assertTrue(self.factor_base.primes[0].is_ramified)
        self.assertEqual([2, 3], [prime.p for prime in self.factor_base.primes if prime.residue_degree == 4])

    def test_orbit_representatives(self):
        """Test that there is one representative per rational prime."""
        self.assertEqual(13, len(self.factor_base.orbit_representatives()))

    def test_valuations(self):
        """Test that the valuations of a smooth element recombine to its norm."""
        element = ZETA5 - 4
        vector = self.factor_base.valuations(element)
        self.assertIsNotNone(vector)
        norms = [self.factor_base.primes[position].norm ** value for position, value in (vector or {}).items()]
        self.assertEqual(341, prod(norms))
        self.assertEqual(1, (vector or {})[self.factor_base.index[PrimeIdeal(11, (7, 1), 5)]])

    def test_valuations_of_units(self):
        """Test that units have the empty exponent vector."""
        self.assertEqual({}, self.factor_base.valuations(1 + ZETA5))

    def test_not_smooth(self):
        """Test that elements with a prime outside the base in their norm are not smooth."""
        self.assertIsNone(FactorBase(5, 20).valuations(ZETA5 - 4))
        self.assertIsNone(self.factor_base.valuations(CycInt.from_int(5, 0)))

    def test_permutations(self):
        """Test that σ_1 is the identity and that σ_2σ_3 = σ_1."""
        identity = tuple(range(len(self.factor_base)))
        self.assertEqual(identity, self.factor_base.permutation(1))
        two, three = self.factor_base.permutation(2), self.factor_base.permutation(3)
        self.assertEqual(identity, tuple(two[position] for position in three))
        self.assertRaises(InputError, self.factor_base.permutation, 10)

    def test_conjugate_vector(self):
        """Test that the valuations of σ_a(x) are the conjugated valuations of x."""
        element = (ZETA5 - 4) * (2 + ZETA5 * 3)
        vector = self.factor_base.valuations(element)
        self.assertIsNotNone(vector)
        for a in range(1, 5):
            conjugate = self.factor_base.conjugate_vector(vector or {}, a)
            self.assertEqual(self.factor_base.valuations(element.galois(a)), conjugate)
