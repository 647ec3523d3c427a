"""Unit tests for the main theorem idèle."""

import unittest
from fractions import Fraction

from cubictk.errors import HypothesisError, IncompleteDataError
from cubictk.model.riemann_roch.branch import BranchComponent, BranchData
from cubictk.model.riemann_roch.idele import main_theorem_idele
from cubictk.model.riemann_roch.localized import surface_degree_table

from ....base import Z5, modular_branch_data


def cube(a: int):
    """Return the character (χ₀^(−a))^⊗3 of (ℤ/5)³."""
    return (Z5.character(-a % 5),) * 3


class MainTheoremIdeleTest(unittest.TestCase):
    """Unit tests for the idèle presenting Θ of the equivariant Euler characteristic."""

    def setUp(self):
        """Compute the idèle of the modular data."""
        self.idele = main_theorem_idele(modular_branch_data(), euler_characteristic=-18)

    def test_places(self):
        """Test that the idèle is supported at p."""
        self.assertEqual([241], self.idele.places)
        self.assertEqual(1, self.idele.factor)
        self.assertEqual(3, self.idele.power.n)

    def test_trivial_factor(self):
        """Test that the exponent vanishes when a factor of φ is trivial."""
        phi = (Z5.character(1), Z5.trivial_character, Z5.character(2))
        self.assertEqual(0, self.idele.exponent(241, phi))

    def test_cube_without_wrap_around(self):
        """Test that the third difference of the quadratic T(χ₀^(−a)) vanishes."""
        # T(χ₀^(−3)) − 3·T(χ₀^(−2)) + 3·T(χ₀^(−1)) − T(1) = 9/5 − 6 + 21/5 − 0
        self.assertEqual(0, self.idele.exponent(241, cube(1)))

    def test_cube_with_wrap_around(self):
        """Test the exponent at (χ₀^(−2))^⊗3, where the powers wrap around."""
        # −(T(χ₀^(−1)) − 3·T(χ₀^(−4)) + 3·T(χ₀^(−2)) − T(1)) = −(7/5 − 12/5 + 6)
        self.assertEqual(-5, self.idele.exponent(241, cube(2)))

    def test_mixed_character(self):
        """Test the exponent at χ₀^(−1) ⊗ χ₀^(−2) ⊗ χ₀^(−3)."""
        phi = (Z5.character(4), Z5.character(3), Z5.character(2))
        self.assertEqual(-4, self.idele.exponent(241, phi))

    def test_integral(self):
        """Test that all exponents are integers on the modular data."""
        self.assertTrue(all(value.denominator == 1 for value in self.idele.exponents[241].values()))

    def test_away_from_s(self):
        """Test that the exponent at places outside S_K is 0."""
        self.assertEqual(0, self.idele.exponent(7, cube(2)))

    def test_squared(self):
        """Test that the squared form doubles every exponent."""
        squared = main_theorem_idele(modular_branch_data(), squared=True, euler_characteristic=-17)
        self.assertEqual(2, squared.factor)
        for phi, value in self.idele.exponents[241].items():
            self.assertEqual(2 * value, squared.exponent(241, phi))

    def test_odd_euler_characteristic(self):
        """Test that the unsquared form needs an even Euler characteristic."""
        self.assertRaises(HypothesisError, main_theorem_idele, modular_branch_data(), euler_characteristic=-17)

    def test_prime_dividing_group_order(self):
        """Test that the residue characteristics must be prime to #G."""
        self.assertRaises(HypothesisError, main_theorem_idele, modular_branch_data(5))

    def test_missing_prime(self):
        """Test that every component needs its residue prime."""
        branch_data = BranchData(Z5, (BranchComponent("y", inertia_order=5),))
        self.assertRaises(IncompleteDataError, main_theorem_idele, branch_data)

    def test_sheaf(self):
        """Test that the trivial bundle of rank 2 doubles the exponents."""
        branch_data = modular_branch_data()
        idele = main_theorem_idele(branch_data, surface_degree_table(branch_data, 2))
        self.assertEqual(-10, idele.exponent(241, cube(2)))

    def test_orbit_constant(self):
        """Test that the exponents are constant on Frobenius orbits when p ≡ 1 mod #G."""
        self.assertIsNone(self.idele.orbit_defect())

    def test_orbit_defect(self):
        """Test that Frobenius at 7 ≡ 2 mod 5 moves (χ₀^(−1))^⊗3 to (χ₀^(−2))^⊗3, whose exponent differs."""
        idele = main_theorem_idele(modular_branch_data(7))
        place, _ = idele.orbit_defect()
        self.assertEqual(7, place)

    def test_as_idele(self):
        """Test the conversion to an idèle of ℚ[G³]."""
        idele = self.idele.as_idele()
        self.assertEqual([241], idele.support)
        self.assertEqual(Fraction(-5), idele.at(241).valuation[cube(2)])
        self.assertTrue(idele.at(7).is_one())
