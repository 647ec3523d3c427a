"""Unit tests for finite abelian groups and their characters."""

import unittest

from cubictk.errors import InputError, ShapeMismatchError
from cubictk.model.group.abelian import FiniteAbelianGroup, GroupPower, abelian_groups
from cubictk.model.group.cyclotomic_number import CycNumber

from ....base import Z2xZ2, Z4, Z5


class FiniteAbelianGroupTest(unittest.TestCase):
    """Unit tests for the finite abelian group class."""

    def test_order_and_exponent(self):
        """Test the order and exponent."""
        group = FiniteAbelianGroup((2, 6))
        self.assertEqual(12, group.order)
        self.assertEqual(6, group.exponent)

    def test_trivial_group(self):
        """Test the trivial group."""
        group = FiniteAbelianGroup()
        self.assertEqual(1, group.order)
        self.assertEqual(1, group.exponent)
        self.assertEqual(1, len(group.characters))
        self.assertEqual(group, FiniteAbelianGroup.cyclic(1))

    def test_invalid_invariant_factors(self):
        """Test that invariant factors must divide each other and be at least 2."""
        self.assertRaises(InputError, FiniteAbelianGroup, (2, 3))
        self.assertRaises(InputError, FiniteAbelianGroup, (1, 4))

    def test_number_of_characters(self):
        """Test that there are as many characters as group elements."""
        for group in abelian_groups(12):
            self.assertEqual(group.order, len(group.characters))

    def test_abelian_groups(self):
        """Test that there are 17 abelian groups of order at most 12."""
        self.assertEqual(17, len(abelian_groups(12)))
        self.assertIn(FiniteAbelianGroup((2, 2, 2)), abelian_groups(8))

    def test_str(self):
        """Test the group as product of cyclic groups."""
        self.assertEqual("ℤ/2 × ℤ/4", str(FiniteAbelianGroup((2, 4))))
        self.assertEqual("(ℤ/5)^3", str(Z5.power(3)))


class GCharacterTest(unittest.TestCase):
    """Unit tests for characters."""

    def test_value_on_generator(self):
        """Test that χ sends the generator to ζ_d^e."""
        self.assertEqual(CycNumber.root_of_unity(5, 2), Z5.character(2).value((1,)))

    def test_values_on_non_cyclic_group(self):
        """Test character values on ℤ/2 × ℤ/2."""
        character = Z2xZ2.character(1, 0)
        self.assertEqual(-1, character.value((1, 1)))
        self.assertEqual(1, character.value((0, 1)))

    def test_multiplication_and_inverse(self):
        """Test the character group law."""
        chi = Z4.character(1)
        self.assertEqual(Z4.character(3), chi * chi * chi)
        self.assertEqual(Z4.character(3), chi.inverse())
        self.assertTrue((chi * chi.inverse()).is_trivial())

    def test_order(self):
        """Test the order of characters."""
        self.assertEqual(2, Z4.character(2).order)
        self.assertEqual(4, Z4.character(3).order)
        self.assertEqual(1, Z4.trivial_character.order)

    def test_exponents_out_of_range(self):
        """Test that character exponents must be reduced."""
        self.assertRaises(InputError, Z5.character, 5)

    def test_wrong_number_of_exponents(self):
        """Test that the number of exponents must equal the rank."""
        self.assertRaises(ShapeMismatchError, Z5.character, 1, 1)

    def test_characters_of_different_groups(self):
        """Test that characters of different groups cannot be multiplied."""
        self.assertRaises(ShapeMismatchError, Z5.character(1).__mul__, Z4.character(1))


class GroupPowerTest(unittest.TestCase):
    """Unit tests for powers of groups."""

    def test_characters(self):
        """Test that G^n has #G^n characters."""
        self.assertEqual(27, len(list(FiniteAbelianGroup((3,)).power(3).characters())))

    def test_pairing(self):
        """Test that the pairing adds up the copies."""
        power = Z5.power(2)
        self.assertEqual(3, power.pairing((Z5.character(1), Z5.character(1)), (1, 2)))

    def test_wrong_character(self):
        """Test that a character of the wrong power is rejected."""
        self.assertRaises(ShapeMismatchError, Z5.power(2).check_character, (Z5.character(1),))

    def test_negative_power(self):
        """Test that the power must be non-negative."""
        self.assertRaises(InputError, GroupPower, Z5, -1)
