"""Unit tests for the cubic conditions."""

from fractions import Fraction

from cubictk.errors import InputError
from cubictk.model.cubic.conditions import (
    is_cocycle,
    is_n_cubic,
    is_rigid,
    is_symmetric,
    is_V_cubic,
    standard_conditions,
)
from cubictk.model.group.cyclotomic_number import CycNumber
from cubictk.model.group.hom import GroupHom, SigmaElt, augmentation_element, rigidity_element
from cubictk.model.group.table import CharTable, ValuationTable

from ....base import SMALL_GROUPS, Z3, Z5, CubictkTestCase


class RigidTest(CubictkTestCase):
    """Unit tests for the rigidity condition."""

    def test_constant_table(self):
        """Test that the constant table 1 is rigid."""
        self.assertEqual((True, None), is_rigid(CharTable.identity(Z3.power(2))))

    def test_value_two_at_trivial_character(self):
        """Test that a table with value 2 at the trivial character is not rigid."""
        power = Z3.power(2)
        table = self.table(power, lambda character: 2 if character == power.trivial_character else 1)
        self.assertEqual((False, power.trivial_character), is_rigid(table))

    def test_theta_of_a_unit(self):
        """Test that λ_(s_3)(α) is rigid."""
        table = self.random_unit(Z3).lambda_z(augmentation_element(Z3, 3))
        self.assertTrue(is_rigid(table)[0])


class SymmetricTest(CubictkTestCase):
    """Unit tests for the symmetry condition."""

    def test_constant_table(self):
        """Test that a constant table is symmetric."""
        self.assertTrue(is_symmetric(CharTable.constant(Z3.power(3), CycNumber.from_rational(5)))[0])

    def test_asymmetric_table(self):
        """Test that a table with a(φ, 1) ≠ a(1, φ) is not symmetric."""
        power = Z3.power(2)
        table = self.table(power, lambda character: 2 if not character[0].is_trivial() else 1)
        symmetric, witness = is_symmetric(table)
        self.assertFalse(symmetric)
        self.assertIsNotNone(witness)

    def test_theta_of_a_unit(self):
        """Test that λ_(s_3)(α) is symmetric."""
        table = self.random_unit(Z3).lambda_z(augmentation_element(Z3, 3))
        self.assertTrue(is_symmetric(table)[0])


class CocycleTest(CubictkTestCase):
    """Unit tests for the cocycle condition."""

    def test_constant_table(self):
        """Test that the constant table 1 satisfies the cocycle condition."""
        self.assertTrue(is_cocycle(CharTable.identity(Z5.power(2)))[0])

    def test_delta_table(self):
        """Test that a(φ₁, …, φ_n) = c^δ(φ₁ nontrivial) fails at ψ = (φ, φ^(−1), 1, …)."""
        power = Z5.power(3)
        table = self.table(power, lambda character: 3 if not character[0].is_trivial() else 1)
        cocycle, witness = is_cocycle(table)
        self.assertFalse(cocycle)
        self.assertIsNotNone(witness)
        phi = Z5.character(1)
        psi = (phi, phi.inverse(), Z5.trivial_character, Z5.trivial_character)
        self.assertIn(psi, list(table.defects(standard_conditions(table)[-1])))

    def test_n_must_be_at_least_two(self):
        """Test that the cocycle condition needs n ≥ 2."""
        self.assertRaises(InputError, is_cocycle, CharTable.identity(Z5.power(1)))


class NCubicTest(CubictkTestCase):
    """Unit tests for n-cubic elements."""

    def test_theta_of_random_units_is_cubic(self):
        """Test that λ_(s_n)(α) is n-cubic for random units α."""
        for index in range(40):
            group = SMALL_GROUPS[index % len(SMALL_GROUPS)]
            n = 2 + index % 3
            if group.order ** (n + 1) > 1300:
                n = 2
            table = self.random_unit(group).lambda_z(augmentation_element(group, n))
            verdict = is_n_cubic(table)
            self.assertTrue(verdict.is_n_cubic, f"{group}, n = {n}: {verdict.witnesses}")

    def test_perturbation_is_caught(self):
        """Test that changing a single value of a cubic table is caught with a witness."""
        power = Z3.power(2)
        table = self.random_unit(Z3).lambda_z(augmentation_element(Z3, 2))
        target = (Z3.character(1), Z3.character(2))
        perturbed = self.table(power, lambda character: table[character] * (2 if character == target else 1))
        verdict = is_n_cubic(perturbed)
        self.assertFalse(verdict.is_n_cubic)
        self.assertTrue(verdict.witnesses)

    def test_products_and_inverses_stay_cubic(self):
        """Test that the cubic tables form a group."""
        s_2 = augmentation_element(Z3, 2)
        first = self.random_unit(Z3).lambda_z(s_2)
        second = self.random_unit(Z3).lambda_z(s_2)
        self.assertTrue(is_n_cubic(first * second).is_n_cubic)
        self.assertTrue(is_n_cubic(first.inverse()).is_n_cubic)

    def test_valuation_tables(self):
        """Test that the additive cubic conditions hold for λ_(s_n) of a valuation table."""
        t = ValuationTable(Z5.power(1), {(chi,): Fraction(chi.exponents[0] ** 2, 5) for chi in Z5.characters})
        self.assertTrue(is_n_cubic(t.lambda_z(augmentation_element(Z5, 2))).is_n_cubic)


class VCubicTest(CubictkTestCase):
    """Unit tests for V-cubic elements."""

    def test_empty_v(self):
        """Test that every table is ∅-cubic."""
        self.assertTrue(is_V_cubic(self.random_unit(Z3), []))

    def test_rigidity_only(self):
        """Test that V = {e} reproduces the rigidity condition."""
        power = Z3.power(2)
        table = self.table(power, lambda character: 1 if character == power.trivial_character else 2)
        self.assertTrue(is_V_cubic(table, [rigidity_element(Z3, 2)]))
        self.assertFalse(is_n_cubic(table).is_n_cubic)

    def test_standard_conditions(self):
        """Test that the standard conditions reproduce is_n_cubic."""
        table = self.random_unit(Z3).lambda_z(augmentation_element(Z3, 3))
        self.assertTrue(is_V_cubic(table, standard_conditions(table)))
        power = Z3.power(2)
        delta = self.table(power, lambda character: 3 if not character[0].is_trivial() else 1)
        self.assertFalse(is_V_cubic(delta, standard_conditions(delta)))

    def test_invalid_v(self):
        """Test that an element not annihilating s_n is rejected."""
        identity = SigmaElt.of((GroupHom.identity(Z3.power(2)), 1))
        self.assertRaises(InputError, is_V_cubic, CharTable.identity(Z3.power(2)), [identity])
