"""Unit tests for the class group commands."""

from unittest.mock import MagicMock, patch

from cubictk.command.classgroup import classgroup, pchi
from cubictk.errors import CertificateMismatchError
from cubictk.model.cyclotomic.class_group import IdealClass
from cubictk.model.modular.lattice import PLUS_CLASS_NUMBER_ASSUMPTION

from ...base import CubictkTestCase, parse


class ClassGroupCommandTest(CubictkTestCase):
    """Unit tests for the classgroup command."""

    def test_trivial(self):
        """Test that the class group of ℤ[ζ_5] is trivial and that h⁻ agrees."""
        outcome = classgroup(parse("classgroup", "--r", "5"))
        self.assertEqual("Cl(ℤ[ζ_5]) = 1", outcome.outputs["class_group"])
        self.assertEqual([], outcome.outputs["invariants"])
        self.assertEqual(1, outcome.outputs["order"])
        self.assertEqual(1, outcome.outputs["h_minus"])
        self.assertEqual((PLUS_CLASS_NUMBER_ASSUMPTION,), outcome.assumptions)
        self.assertNotIn("annihilation", outcome.outputs)

    def test_annihilation_of_trivial_group(self):
        """Test that a trivial group needs no certificates."""
        outcome = classgroup(parse("classgroup", "--r", "7", "--annihilation"))
        self.assertEqual([], outcome.outputs["annihilation"])
        self.assertTrue(outcome.passed)

    @patch("cubictk.command.classgroup.h_minus", MagicMock(return_value=3))
    @patch("cubictk.command.classgroup.annihilation_certificate", MagicMock(return_value=None))
    @patch("cubictk.command.classgroup.class_group")
    def test_missing_certificate(self, class_group: MagicMock) -> None:
        """Test that a generator without certificate is a mathematical failure."""
        class_group.return_value.generators.return_value = [IdealClass((3,), (1,))]
        class_group.return_value.invariants = (3,)
        self.assertRaises(CertificateMismatchError, classgroup, parse("classgroup", "--r", "23", "--annihilation"))


class PChiCommandTest(CubictkTestCase):
    """Unit tests for the pchi command."""

    def test_prime(self):
        """Test that P_χ has residue degree 1 and norm p."""
        outcome = pchi(parse("pchi", "--p", "241", "--r", "5"))
        self.assertEqual(241, outcome.outputs["p"])
        self.assertEqual(1, outcome.outputs["residue_degree"])
        self.assertEqual(241, outcome.outputs["norm"])
        self.assertEqual((), outcome.assumptions)
        self.assertNotIn("class", outcome.outputs)

    def test_class(self):
        """Test that the class of P_χ in the trivial class group is trivial."""
        outcome = pchi(parse("pchi", "--p", "241", "--r", "5", "--class"))
        self.assertEqual({"invariants": [], "coordinates": []}, outcome.outputs["class"])
        self.assertEqual((PLUS_CLASS_NUMBER_ASSUMPTION,), outcome.assumptions)
