"""Unit tests for character-value tables."""

import random
from fractions import Fraction

from cubictk.errors import IncompleteDataError, ShapeMismatchError
from cubictk.model.group.cyclotomic_number import CycNumber
from cubictk.model.group.hom import GroupHom, augmentation_element, cocycle_element
from cubictk.model.group.table import CharTable, ValuationTable, random_unit
from cubictk.tools import subsets

from ....base import Z2, Z3, Z4, Z5, CubictkTestCase


def convolve(alpha: dict, beta: dict, order: int) -> dict:
    """Return the product of two elements of ℚ[ℤ/order]."""
    product = {(g,): 0 for g in range(order)}
    for (g,), a in alpha.items():
        for (h,), b in beta.items():
            product[((g + h) % order,)] += a * b
    return product


class CharTableTest(CubictkTestCase):
    """Unit tests for the table of a unit of K[G^n]."""

    def test_product_of_group_ring_elements(self):
        """Test that convolution of group-ring elements corresponds to the pointwise product of tables."""
        power = Z3.power(1)
        alpha = {(0,): 2, (1,): -1, (2,): 1}
        beta = {(0,): 1, (1,): 3, (2,): 0}
        product = CharTable.from_group_ring_element(power, convolve(alpha, beta, 3))
        tables = CharTable.from_group_ring_element(power, alpha) * CharTable.from_group_ring_element(power, beta)
        self.assertEqual(product, tables)

    def test_values(self):
        """Test the value of 1 + 2g at the characters of ℤ/5."""
        table = CharTable.from_group_ring_element(Z5.power(1), {(0,): 1, (1,): 2})
        self.assertEqual(3, table[(Z5.trivial_character,)])
        self.assertEqual(1 + 2 * CycNumber.root_of_unity(5, 2), table[(Z5.character(2),)])

    def test_inverse(self):
        """Test that a table times its inverse is the identity."""
        table = self.random_unit(Z4)
        self.assertTrue((table * table.inverse()).is_identity())
        self.assertEqual(CharTable.identity(Z4.power(1)), table / table)

    def test_incomplete_table(self):
        """Test that a table needs a value at every character."""
        power = Z3.power(1)
        self.assertRaises(IncompleteDataError, CharTable, power, {(Z3.trivial_character,): CycNumber.from_rational(1)})

    def test_galois_equivariance(self):
        """Test that tables of group-ring elements are Galois equivariant and other tables are detected."""
        self.assertIsNone(self.random_unit(Z5).galois_defect())
        zeta = CycNumber.root_of_unity(3)
        table = CharTable(Z3.power(1), {(chi,): zeta if chi.exponents[0] else zeta**0 for chi in Z3.characters})
        self.assertIsNotNone(table.galois_defect())

    def test_lambda_s2_spot_value(self):
        """Test that λ_(s_2)(a) at (φ, φ) equals a(φ²)a(1)/a(φ)²."""
        table = self.random_unit(Z3)
        theta = table.lambda_z(augmentation_element(Z3, 2))
        phi = Z3.character(1)
        expected = table[(phi * phi,)] * table[(Z3.trivial_character,)] / table[(phi,)] ** 2
        self.assertEqual(expected, theta[(phi, phi)])

    def test_composition_law(self):
        """Test that λ_z′(λ_z(a)) is trivial when z′·z = 0."""
        table = self.random_unit(Z3)
        theta = table.lambda_z(augmentation_element(Z3, 2))
        self.assertTrue(theta.lambda_z(cocycle_element(Z3, 2)).is_identity())

    def test_lambda_of_identity(self):
        """Test that λ_z(1) = 1."""
        identity = CharTable.identity(Z4.power(1))
        self.assertTrue(identity.lambda_z(augmentation_element(Z4, 3)).is_identity())

    def test_lambda_shape_mismatch(self):
        """Test that z must start at the group power of the table."""
        table = self.random_unit(Z3)
        self.assertRaises(ShapeMismatchError, table.lambda_z, augmentation_element(Z4, 2))

    def test_push_forward(self):
        """Test that pushing a table forward along ℤ/4 → ℤ/2 gives the table of the pushed group-ring element."""
        alpha = {(0,): 2, (1,): 1, (2,): -1, (3,): 1}
        pushed = {(0,): alpha[(0,)] + alpha[(2,)], (1,): alpha[(1,)] + alpha[(3,)]}
        hom = GroupHom(Z4.power(1), Z2.power(1), ((1,),))
        table = CharTable.from_group_ring_element(Z4.power(1), alpha)
        self.assertEqual(CharTable.from_group_ring_element(Z2.power(1), pushed), table.push_forward(hom))

    def test_push_forward_along_a_hom_from_another_group(self):
        """Test that the hom must start at the group of the table."""
        hom = GroupHom(Z4.power(1), Z2.power(1), ((1,),))
        self.assertRaises(ShapeMismatchError, self.random_unit(Z3).push_forward, hom)

    def test_has_zero(self):
        """Test that a vanishing character value is detected: 1 + g vanishes at the sign character of ℤ/2."""
        self.assertTrue(CharTable.from_group_ring_element(Z2.power(1), {(0,): 1, (1,): 1}).has_zero())


class ValuationTableTest(CubictkTestCase):
    """Unit tests for valuation tables."""

    def test_lambda_is_the_alternating_sum(self):
        """Test that λ_(s_n)(t) at (φ₁, …, φ_n) equals Σ_I (−1)^(n−#I) t(Π_(i∈I) φᵢ)."""
        power = Z5.power(1)
        t = ValuationTable(power, {(chi,): Fraction(chi.exponents[0] ** 2, 5) for chi in Z5.characters})
        theta = t.lambda_z(augmentation_element(Z5, 3))
        phis = (Z5.character(1), Z5.character(2), Z5.character(4))
        expected = Fraction(0)
        for subset in subsets(range(3)):
            product = Z5.trivial_character
            for index in subset:
                product *= phis[index]
            expected += (-1) ** (3 - len(subset)) * t[(product,)]
        self.assertEqual(expected, theta[phis])

    def test_scaled(self):
        """Test that scaling multiplies every exponent."""
        t = ValuationTable.constant(Z3.power(1), Fraction(1, 3))
        self.assertEqual(ValuationTable.constant(Z3.power(1), Fraction(1)), t.scaled(3))

    def test_orbit_defect(self):
        """Test that a table that is not constant on Galois orbits is detected."""
        t = ValuationTable(Z5.power(1), {(chi,): Fraction(chi.exponents[0]) for chi in Z5.characters})
        self.assertIsNotNone(t.orbit_defect())
        self.assertIsNone(ValuationTable.constant(Z5.power(1), Fraction(2)).orbit_defect())


class RandomUnitTest(CubictkTestCase):
    """Unit tests for random units of ℚ[G]."""

    def test_no_zero_values(self):
        """Test that random units have no vanishing character value and are Galois-equivariant."""
        for seed in range(10):
            table = random_unit(Z5, random.Random(seed))
            self.assertFalse(table.has_zero())
            self.assertIsNone(table.galois_defect())

    def test_reproducible(self):
        """Test that the same seed gives the same unit."""
        self.assertEqual(random_unit(Z4, random.Random(1)), random_unit(Z4, random.Random(1)))
