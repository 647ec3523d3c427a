"""Unit tests for the Steinitz class of the lattice of weight 2 cusp forms."""

import unittest
from unittest.mock import patch

from cubictk.errors import CertificateMismatchError, HypothesisError, ShapeMismatchError
from cubictk.model.cyclotomic.class_group import IdealClass, class_group
from cubictk.model.modular.lattice import (
    PLUS_CLASS_NUMBER_ASSUMPTION,
    bsd_holds,
    bsd_relation,
    eigen_path,
    lattice_steinitz_class,
)
from cubictk.model.stickelberger.eigen import EigenDecomp
from cubictk.model.stickelberger.stickelberger import apply_stickelberger, theta1_build, theta2_build


class LatticeSteinitzClassTest(unittest.TestCase):
    """Unit tests for the lattice class."""

    @classmethod
    def setUpClass(cls):
        """Compute the class group of ℤ[ζ_23] once."""
        cls.group = class_group(23)

    def test_241(self):
        """Test that the lattice is free of rank 18 for p = 241, r = 5."""
        result = lattice_steinitz_class(241, 5)
        self.assertEqual(18, result.n_chi)
        self.assertTrue(result.is_free)
        self.assertEqual((1, 2, 3, 4), result.characters)
        self.assertTrue(result.eigen_path_agrees)
        self.assertEqual((PLUS_CLASS_NUMBER_ASSUMPTION,), result.assumptions)

    def test_601(self):
        """Test that the lattice is free of rank 48 for p = 601, r = 5."""
        result = lattice_steinitz_class(601, 5, exponents=(2,))
        self.assertEqual((48, True, (2,)), (result.n_chi, result.is_free, result.characters))

    def test_1657(self):
        """Test that θ₂·[P_χ] is trivial in Cl(ℤ[ζ_23]) ≅ ℤ/3 for all characters of order 23 mod 1657."""
        result = lattice_steinitz_class(1657, 23, group=self.group)
        self.assertEqual(136, result.n_chi)
        self.assertEqual((0,), result.ideal_class.coordinates)
        self.assertTrue(result.is_free)
        self.assertEqual(22, len(result.values))
        self.assertTrue(all(value.is_zero() for value in result.values.values()))
        self.assertTrue(result.eigen_path_agrees)

    def test_hypotheses(self):
        """Test that the cover must exist."""
        self.assertRaises(HypothesisError, lattice_steinitz_class, 241, 7)

    def test_no_eigen_path(self):
        """Test that the second path is skipped when the eigenspaces do not span the class group."""
        with patch("cubictk.model.modular.lattice.eigen_decompose", return_value=EigenDecomp(3, 3, ())):
            result = lattice_steinitz_class(1657, 23, group=self.group, exponents=(1,))
        self.assertIsNone(result.eigen_path_agrees)

    def test_paths_disagree(self):
        """Test that disagreement between the two paths is reported."""
        generator = self.group.generators()[0]
        with (
            patch("cubictk.model.modular.lattice.eigen_path", return_value=generator),
            self.assertRaises(CertificateMismatchError),
        ):
            lattice_steinitz_class(1657, 23, group=self.group, exponents=(1,))

    def test_characters_disagree(self):
        """Test that a class that is trivial for one character only is reported."""
        values = [self.group.zero(), self.group.generators()[0]]
        with (
            patch("cubictk.model.modular.lattice.apply_stickelberger", side_effect=values),
            patch("cubictk.model.modular.lattice.eigen_path", return_value=None),
            self.assertRaises(CertificateMismatchError),
        ):
            lattice_steinitz_class(1657, 23, group=self.group, exponents=(1, 2))


class EigenPathTest(unittest.TestCase):
    """Unit tests for the action of Stickelberger elements through the eigenspaces."""

    def test_agrees_with_action(self):
        """Test that the eigenspace path gives θ·c for every class c."""
        group = class_group(23)
        for theta in (theta1_build(23), theta2_build(23, 1657)):
            for multiple in range(3):
                ideal_class = group.generators()[0] * multiple
                self.assertEqual(apply_stickelberger(theta, ideal_class, group), eigen_path(theta, ideal_class, group))

    def test_trivial_group(self):
        """Test that on a trivial class group the path gives the trivial class."""
        group = class_group(5)
        self.assertTrue(eigen_path(theta2_build(5, 241), group.zero(), group).is_zero())


class BsdHoldsTest(unittest.TestCase):
    """Unit tests for the class relation between θ₂·[P_χ], Ш and the Mordell-Weil group."""

    @classmethod
    def setUpClass(cls):
        """Use Cl(ℤ[ζ_23]) ≅ ℤ/3 as the ambient group."""
        cls.group = class_group(23)
        cls.zero = cls.group.zero()
        cls.c = cls.group.generators()[0]

    def test_all_trivial(self):
        """Test that the relation holds when all classes are trivial."""
        self.assertTrue(bsd_holds(self.zero, self.zero, self.zero, self.group))

    def test_sha_accounts_for_the_class(self):
        """Test that the relation holds when Ш has the conjugate class."""
        self.assertTrue(bsd_holds(self.c, self.group.conjugate(self.c), self.zero, self.group))

    def test_nontrivial_class_alone(self):
        """Test that a nontrivial lattice class needs a nontrivial class of Ш or of the Mordell-Weil group."""
        self.assertFalse(bsd_holds(self.c, self.zero, self.zero, self.group))

    def test_mordell_weil(self):
        """Test that on ℤ/3, where conjugation is −1, the Mordell-Weil class drops out."""
        self.assertTrue(bsd_holds(self.zero, self.zero, self.c, self.group))

    def test_conjugation_invariance(self):
        """Test that conjugating all classes does not change the outcome."""
        classes = (self.zero, self.c, self.c * 2)
        for lattice in classes:
            for sha in classes:
                for mordell_weil in classes:
                    conjugates = [self.group.conjugate(value) for value in (lattice, sha, mordell_weil)]
                    self.assertEqual(
                        bsd_holds(lattice, sha, mordell_weil, self.group), bsd_holds(*conjugates, self.group)
                    )

    def test_class_group_mismatch(self):
        """Test that the classes must belong to the class group."""
        other = IdealClass.zero(())
        self.assertRaises(ShapeMismatchError, bsd_holds, self.zero, other, self.zero, self.group)


class BsdRelationTest(unittest.TestCase):
    """Unit tests for the class relation on actual modular data."""

    def test_241(self):
        """Test that trivial classes satisfy the relation in Cl(ℤ[ζ_5, 1/2]) = 1."""
        zero = IdealClass.zero(())
        self.assertTrue(bsd_relation(241, 5, zero, zero))

    def test_1657(self):
        """Test that the primes above 2 kill Cl(ℤ[ζ_23]), so trivial classes satisfy the relation."""
        zero = IdealClass.zero(())
        self.assertTrue(bsd_relation(1657, 23, zero, zero, group=class_group(23, invert_two=True)))

    def test_mismatch(self):
        """Test that classes of another group are refused."""
        other = class_group(23).zero()
        self.assertRaises(ShapeMismatchError, bsd_relation, 241, 5, other, other)
