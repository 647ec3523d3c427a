"""Unit tests for class groups of cyclotomic integers."""

import unittest

from cubictk.errors import CertificateMismatchError, HypothesisError, InputError
from cubictk.model.cyclotomic.class_group import IdealClass, class_group
from cubictk.model.cyclotomic.ideal import split_prime


class IdealClassTest(unittest.TestCase):
    """Unit tests for ideal classes."""

    def test_reduction(self):
        """Test that coordinates are reduced modulo the invariants."""
        self.assertEqual((1,), IdealClass((3,), (4,)).coordinates)

    def test_arithmetic(self):
        """Test addition, negation, subtraction and multiples."""
        one = IdealClass((3,), (1,))
        self.assertEqual(IdealClass((3,), (2,)), one + one)
        self.assertEqual(IdealClass((3,), (2,)), -one)
        self.assertTrue((one - one).is_zero())
        self.assertTrue((3 * one).is_zero())

    def test_order(self):
        """Test the order of classes."""
        self.assertEqual(3, IdealClass((3,), (1,)).order())
        self.assertEqual(2, IdealClass((2, 4), (1, 2)).order())
        self.assertEqual(1, IdealClass.zero(()).order())

    def test_str(self):
        """Test the string forms."""
        self.assertEqual("(1 mod 3)", str(IdealClass((3,), (1,))))
        self.assertEqual("0", str(IdealClass.zero(())))

    def test_mismatches(self):
        """Test that coordinates must fit the group and that classes of different groups cannot be added."""
        self.assertRaises(InputError, IdealClass, (3,), (1, 2))
        self.assertRaises(InputError, IdealClass((3,), (1,)).__add__, IdealClass((5,), (1,)))


class TrivialClassGroupTest(unittest.TestCase):
    """Unit tests for class number one."""

    def test_r_5(self):
        """Test that ℤ[ζ_5] has class number one."""
        group = class_group(5)
        self.assertTrue(group.is_trivial())
        self.assertEqual(1, group.order)
        self.assertEqual(1, group.exponent)
        self.assertEqual([], group.generators())
        self.assertEqual("Cl(ℤ[ζ_5]) = 1", str(group))

    def test_r_19(self):
        """Test that ℤ[ζ_19] has class number one."""
        self.assertTrue(class_group(19).is_trivial())

    def test_principal_prime(self):
        """Test that a prime of ℤ[ζ_7] has a certified generator."""
        group = class_group(7)
        position = group.factor_base.index[split_prime(7, 29)[0]]
        certificate = group.principality_certificate({position: 1})
        self.assertIsNotNone(certificate)
        self.assertTrue(certificate and certificate.verify(group.factor_base))

    def test_class_of_prime_outside_the_base(self):
        """Test that primes outside the factor base have the trivial class too."""
        group = class_group(5)
        self.assertTrue(group.class_of_prime(split_prime(5, 1021)[0]).is_zero())


class ClassGroupOfR23Test(unittest.TestCase):
    """Unit tests for the class group of ℤ[ζ_23], which is cyclic of order 3."""

    def setUp(self) -> None:
        """Compute the class group and pick a prime above 47."""
        self.group = class_group(23)
        self.prime = split_prime(23, 47)[0]
        self.position = self.group.factor_base.index[self.prime]

    def test_structure(self):
        """Test the invariants."""
        self.assertEqual((3,), self.group.invariants)
        self.assertEqual(3, self.group.order)
        self.assertEqual(3, self.group.exponent)
        self.assertEqual("Cl(ℤ[ζ_23]) = ℤ/3", str(self.group))
        self.assertEqual([IdealClass((3,), (1,))], self.group.generators())

    def test_primes_above_47_are_not_principal(self):
        """Test that the primes above 47 are not principal."""
        ideal_class = self.group.class_of_prime(self.prime)
        self.assertFalse(ideal_class.is_zero())
        self.assertIsNone(self.group.principality_certificate({self.position: 1}))

    def test_order_kills_every_prime(self):
        """Test that h·[𝔭] = 0 for primes of the factor base."""
        for prime in self.group.factor_base.orbit_representatives():
            self.assertTrue((self.group.class_of_prime(prime) * self.group.order).is_zero())

    def test_cube_is_principal(self):
        """Test that 𝔭³ has a certified generator."""
        certificate = self.group.principality_certificate({self.position: 3})
        self.assertIsNotNone(certificate)
        self.assertTrue(certificate and certificate.verify(self.group.factor_base))

    def test_compact_certificate(self):
        """Test that principal ideals with negative exponents are certified by products of relation elements."""
        other = self.group.factor_base.index[self.prime.galois(5)]
        vector = {self.position: 3, other: -3}
        certificate = self.group.principality_certificate(vector)
        self.assertIsNotNone(certificate)
        self.assertTrue(certificate and certificate.verify(self.group.factor_base))

    def test_class_of_ideal(self):
        """Test the class of an ideal given by its basis."""
        ideal = self.prime.ideal()
        self.assertEqual(self.group.class_of_prime(self.prime), self.group.class_of(ideal))
        self.assertTrue(self.group.class_of(ideal.power(3)).is_zero())
        self.assertEqual(self.group.class_of_prime(self.prime), self.group.class_of(self.prime))

    def test_ideal_of_vector(self):
        """Test building ideals from exponent vectors."""
        self.assertEqual(self.prime.ideal(), self.group.ideal_of_vector({self.position: 1}))
        self.assertRaises(InputError, self.group.ideal_of_vector, {self.position: -1})

    def test_galois_action(self):
        """Test that σ_a acts compatibly with composition and that complex conjugation inverts classes."""
        ideal_class = self.group.class_of_prime(self.prime)
        for a, b in ((2, 3), (5, 7)):
            self.assertEqual(
                self.group.galois_action(a * b, ideal_class),
                self.group.galois_action(a, self.group.galois_action(b, ideal_class)),
            )
        self.assertEqual(self.group.class_of_prime(self.prime.galois(5)), self.group.galois_action(5, ideal_class))
        self.assertEqual(-ideal_class, self.group.conjugate(ideal_class))
        self.assertTrue(self.group.galois_action(2, self.group.zero()).is_zero())

    def test_lift(self):
        """Test that lifted classes give back the class."""
        for ideal_class in (self.group.zero(), *self.group.generators()):
            self.assertEqual(ideal_class, self.group.class_of_vector(self.group.lift(ideal_class)))

    def test_inverting_two(self):
        """Test that the primes above 2 generate the class group of ℤ[ζ_23]."""
        group = class_group(23, invert_two=True)
        self.assertTrue(group.is_trivial())
        self.assertEqual("Cl(ℤ[ζ_23, 1/2]) = 1", str(group))
        self.assertTrue(group.class_of_prime(split_prime(23, 2)[0]).is_zero())
        self.assertRaises(InputError, group.principality_certificate, {0: 1})


class ClassGroupFailureTest(unittest.TestCase):
    """Unit tests for class group computations that fail."""

    def test_r_too_large(self):
        """Test that r is limited."""
        self.assertRaises(HypothesisError, class_group, 29)
        self.assertRaises(InputError, class_group, 9)

    def test_starved_factor_base(self):
        """Test that a factor base that is too small is caught by the certificate."""
        self.assertRaises(CertificateMismatchError, class_group, 23, factor_base_bound=10)
