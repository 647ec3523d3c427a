"""Unit tests for Gauss sums."""

import unittest

from cubictk.errors import BudgetExhaustedError, HypothesisError, InputError
from cubictk.model.cyclotomic.ideal import PrimeIdeal
from cubictk.model.cyclotomic.integer import CycInt
from cubictk.model.group.cyclotomic_number import CycNumber
from cubictk.model.group.dirichlet import DirichletCharacter
from cubictk.model.stickelberger.gauss import gauss_sum, gauss_sum_check, jacobi_sum


class GaussSumTest(unittest.TestCase):
    """Unit tests for Gauss and Jacobi sums."""

    def test_trivial_character(self):
        """Test that the Gauss sum of the trivial character is Σ ζ_p^j = −1."""
        self.assertEqual(CycNumber.from_rational(-1, 55), gauss_sum(DirichletCharacter(11, 5, 0)))

    def test_jacobi_sum_mod_7(self):
        """Test that J(ψ, ψ) = −1 − 3ζ_3 for the cubic character mod 7 with ψ(3) = ζ_3."""
        character = DirichletCharacter(7, 3, 1)
        self.assertEqual(CycInt(3, (-1, -3)), jacobi_sum(character, character, 3))

    def test_jacobi_sum_has_absolute_value_root_p(self):
        """Test that J·J̄ = p."""
        character = DirichletCharacter(11, 5, 1)
        jacobi = jacobi_sum(character, DirichletCharacter(11, 5, 2), 5)
        self.assertEqual(CycInt.from_int(5, 11), jacobi * jacobi.galois(-1))


class GaussSumCheckTest(unittest.TestCase):
    """Unit tests for the checks on Gauss sums."""

    def test_p_11_r_5(self):
        """Test that τ(ψ)·τ(ψ̄) = 11 and that τ(ψ)^5 factors as Stickelberger's theorem predicts."""
        report = gauss_sum_check(11, 5)
        self.assertTrue(report.norm_identity)
        self.assertTrue(report.jacobi_identity)
        self.assertTrue(report.supported_above_p)
        self.assertEqual(report.expected_valuations, report.valuations)
        self.assertEqual([1, 2, 3, 4], sorted(report.valuations.values()))
        self.assertTrue(report.passed)

    def test_p_7_r_3(self):
        """Test that τ(ψ)³ = 7·J(ψ, ψ) has valuation 2 at (7, ζ − 2) and 1 at (7, ζ − 4)."""
        report = gauss_sum_check(7, 3)
        self.assertEqual({PrimeIdeal(7, (5, 1), 3): 2, PrimeIdeal(7, (3, 1), 3): 1}, report.valuations)
        self.assertTrue(report.passed)

    def test_other_characters(self):
        """Test the checks for all characters of order 5 mod 11 and at the degree budget."""
        for exponent in range(1, 5):
            self.assertTrue(gauss_sum_check(11, 5, exponent).passed)
        self.assertTrue(gauss_sum_check(31, 3).passed)

    def test_trivial_character(self):
        """Test that for the trivial character only τ = −1 is checked."""
        report = gauss_sum_check(11, 5, 0)
        self.assertTrue(report.passed)
        self.assertEqual({}, report.valuations)

    def test_errors(self):
        """Test that p must be a prime ≡ 1 mod r and that the degree is bounded."""
        self.assertRaises(BudgetExhaustedError, gauss_sum_check, 41, 5)
        self.assertRaises(HypothesisError, gauss_sum_check, 13, 5)
        self.assertRaises(InputError, gauss_sum_check, 21, 5)
        self.assertTrue(gauss_sum_check(41, 5, degree_budget=160).passed)
