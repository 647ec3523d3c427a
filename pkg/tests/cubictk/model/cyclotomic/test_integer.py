"""Unit tests for cyclotomic integers."""

import unittest

from cubictk.errors import InputError
from cubictk.model.cyclotomic.integer import CycInt, check_prime, evaluation_prime

from ....base import CubictkTestCase


class CheckPrimeTest(unittest.TestCase):
    """Unit tests for the prime check."""

    def test_odd_primes(self):
        """Test that odd primes pass."""
        for r in (3, 5, 23):
            check_prime(r)

    def test_other_numbers(self):
        """Test that 2 and composite numbers are rejected."""
        for r in (2, 9, 1):
            self.assertRaises(InputError, check_prime, r)


class EvaluationPrimeTest(unittest.TestCase):
    """Unit tests for evaluation primes."""

    def test_root_has_order_r(self):
        """Test that the root is a nontrivial r-th root of unity modulo q ≡ 1 mod r."""
        q, root = evaluation_prime(7, 20)
        self.assertEqual(1, q % 7)
        self.assertGreaterEqual(q, 2**20)
        self.assertNotEqual(1, root)
        self.assertEqual(1, pow(root, 7, q))


class CycIntTest(CubictkTestCase):
    """Unit tests for elements of ℤ[ζ_r]."""

    def random_element(self, r: int, size: int = 3) -> CycInt:
        """Return a random element with small coordinates."""
        return CycInt(r, tuple(self.random.randint(-size, size) for _ in range(r - 1)))

    def test_zeta_to_the_r(self):
        """Test that ζ^r = 1."""
        self.assertEqual(CycInt.from_int(5, 1), CycInt.zeta(5) ** 5)

    def test_top_power_of_zeta(self):
        """Test that ζ^(r−1) = −1 − ζ − ⋯ − ζ^(r−2)."""
        self.assertEqual((-1, -1, -1, -1), CycInt.zeta(5, 4).coeffs)

    def test_arithmetic_with_integers(self):
        """Test mixing elements and integers."""
        zeta = CycInt.zeta(5)
        self.assertEqual((1, 1, 0, 0), (1 + zeta).coeffs)
        self.assertEqual((1, -1, 0, 0), (1 - zeta).coeffs)
        self.assertEqual((-1, 1, 0, 0), (zeta - 1).coeffs)
        self.assertEqual((0, 3, 0, 0), (3 * zeta).coeffs)

    def test_norms(self):
        """Test the norms of 1 − ζ, of rational integers, of units and of zero."""
        self.assertEqual(5, (1 - CycInt.zeta(5)).norm())
        self.assertEqual(23, (1 - CycInt.zeta(23)).norm())
        self.assertEqual(16, CycInt.from_int(5, 2).norm())
        self.assertEqual(1, (1 + CycInt.zeta(7)).norm())
        self.assertEqual(0, CycInt.from_int(5, 0).norm())

    def test_norm_of_linear_element(self):
        """Test that N(ζ − 4) = Φ_5(4) = 341."""
        self.assertEqual(341, (CycInt.zeta(5) - 4).norm())

    def test_norm_is_multiplicative(self):
        """Test N(xy) = N(x)N(y) on random pairs."""
        for r in (5, 7, 11):
            for _ in range(30):
                x, y = self.random_element(r), self.random_element(r)
                self.assertEqual(x.norm() * y.norm(), (x * y).norm())

    def test_galois_composition(self):
        """Test that σ_a ∘ σ_b = σ_(ab)."""
        x = self.random_element(7)
        for a in range(1, 7):
            for b in range(1, 7):
                self.assertEqual(x.galois(a * b), x.galois(b).galois(a))

    def test_galois_is_multiplicative(self):
        """Test that σ_a is a ring homomorphism."""
        x, y = self.random_element(11), self.random_element(11)
        self.assertEqual(x.galois(3) * y.galois(3), (x * y).galois(3))

    def test_norm_is_galois_invariant(self):
        """Test that conjugate elements have the same norm."""
        x = self.random_element(11)
        self.assertEqual(x.norm(), x.galois(2).norm())

    def test_t2(self):
        """Test T₂ of 1 and of 1 − ζ."""
        self.assertEqual(4, CycInt.from_int(5, 1).t2())
        self.assertEqual(10, (1 - CycInt.zeta(5)).t2())

    def test_divide_exactly(self):
        """Test division by rational integers."""
        self.assertEqual(CycInt.from_int(5, 2), CycInt.from_int(5, 6).divide_exactly(3))
        self.assertRaises(InputError, CycInt.from_int(5, 6).divide_exactly, 4)

    def test_is_rational(self):
        """Test recognizing rational integers."""
        self.assertTrue(CycInt.from_int(5, 7).is_rational())
        self.assertFalse(CycInt.zeta(5).is_rational())

    def test_cyclic_coefficients(self):
        """Test that the cyclic coefficients end with a zero."""
        self.assertEqual([1, 2, 0, 0, 0], (1 + 2 * CycInt.zeta(5)).cyclic())

    def test_multiplication_rows(self):
        """Test that the multiplication rows of 1 are the standard basis."""
        rows = CycInt.from_int(5, 1).multiplication_rows()
        self.assertEqual([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], rows)

    def test_invalid_operations(self):
        """Test negative powers, σ_r, mixed rings and wrong numbers of coordinates."""
        zeta = CycInt.zeta(5)
        self.assertRaises(InputError, pow, zeta, -1)
        self.assertRaises(InputError, zeta.galois, 5)
        self.assertRaises(InputError, zeta.__add__, CycInt.zeta(7))
        self.assertRaises(InputError, CycInt, 5, (1, 2))

    def test_str(self):
        """Test the string representation."""
        self.assertEqual("1 - ζ", str(1 - CycInt.zeta(5)))
        self.assertEqual("-4 + ζ + 2ζ^3", str(CycInt(5, (-4, 1, 0, 2))))
        self.assertEqual("0", str(CycInt.from_int(5, 0)))
