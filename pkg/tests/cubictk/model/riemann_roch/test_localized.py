"""Unit tests for the localized Riemann-Roch character functions."""

import unittest
from fractions import Fraction

from cubictk.errors import HypothesisError, IncompleteDataError, InputError
from cubictk.model.riemann_roch.branch import BranchComponent, BranchData
from cubictk.model.riemann_roch.fuzz import fuzz_branch_data
from cubictk.model.riemann_roch.localized import (
    DegreeTable,
    integrality_check,
    surface_degree_table,
    t_pi_function,
    t_pi_general,
    t_pi_surface,
)

from ....base import Z5, modular_branch_data


def chi0_power(a: int):
    """Return χ₀^(−a) on ℤ/5."""
    return Z5.character(-a % 5)


class TPiSurfaceTest(unittest.TestCase):
    """Unit tests for T_π on relative curves."""

    def test_modular_data(self):
        """Test the values on the branch data of the order 5 cover of X₀(241)."""
        branch_data = modular_branch_data()
        values = [t_pi_surface(branch_data, chi0_power(a)) for a in range(5)]
        self.assertEqual([0, Fraction(7, 5), 2, Fraction(9, 5), Fraction(4, 5)], values)

    def test_trivial_character(self):
        """Test that T_π vanishes at the trivial character."""
        self.assertEqual(0, t_pi_surface(modular_branch_data(), Z5.trivial_character))

    def test_other_prime(self):
        """Test that only the components above the given prime count."""
        self.assertEqual(0, t_pi_surface(modular_branch_data(), chi0_power(1), 2))
        self.assertEqual(Fraction(7, 5), t_pi_surface(modular_branch_data(), chi0_power(1), 241))

    def test_cross_terms(self):
        """Test that both orders of a pair of distinct components count."""
        a = BranchComponent("a", inertia_order=5)
        b = BranchComponent("b", inertia_order=5)
        branch_data = BranchData(Z5, (a, b), {(0, 1): 1})
        # g = −1/5 on both, so T = (2·(1/25)·1)/2
        self.assertEqual(Fraction(1, 25), t_pi_surface(branch_data, Z5.character(1)))

    def test_dimension(self):
        """Test that the surface formula needs relative dimension 1."""
        branch_data = BranchData(Z5, (), dimension=2)
        self.assertRaises(HypothesisError, t_pi_surface, branch_data, Z5.trivial_character)


class DegreeTableTest(unittest.TestCase):
    """Unit tests for degree tables."""

    def test_keys_are_sorted(self):
        """Test that the order of the components in a key does not matter."""
        table = DegreeTable(1, 1, {((1, 0), 0): 3})
        self.assertEqual(3, table.degree((0, 1), 0))
        self.assertEqual(3, table.degree((1, 0), 0))

    def test_missing_entry(self):
        """Test that missing entries are reported."""
        table = DegreeTable(1, 1, {})
        self.assertRaises(IncompleteDataError, table.degree, (0,), 0)

    def test_out_of_range(self):
        """Test that entries must have 1 ≤ l ≤ d + 1 and 0 ≤ t ≤ d + 1 − l."""
        self.assertRaises(InputError, DegreeTable, 1, 1, {((0, 0), 1): 1})
        self.assertRaises(InputError, DegreeTable, 1, 1, {((0, 0, 0), 0): 1})
        self.assertRaises(InputError, DegreeTable, 1, 1, {((), 0): 1})

    def test_surface_table(self):
        """Test the degree table of 𝒪_Y on the modular data."""
        table = surface_degree_table(modular_branch_data())
        self.assertEqual(Fraction(-9, 1), table.degree((0,), 0))
        self.assertEqual(0, table.degree((0,), 1))
        self.assertEqual(20, table.degree((1, 0), 0))
        self.assertEqual(-20, table.degree((1, 1), 0))

    def test_surface_table_dimension(self):
        """Test that surface tables need relative dimension 1."""
        self.assertRaises(HypothesisError, surface_degree_table, BranchData(Z5, (), dimension=2))


class TPiGeneralTest(unittest.TestCase):
    """Unit tests for T_(π,𝒢)."""

    def test_structure_sheaf(self):
        """Test that 𝒢 = 𝒪_Y reproduces the surface formula."""
        branch_data = modular_branch_data()
        table = surface_degree_table(branch_data)
        for chi in Z5.characters:
            self.assertEqual(t_pi_surface(branch_data, chi), t_pi_general(branch_data, table, chi))

    def test_trivial_rank_two_bundle(self):
        """Test that the trivial bundle of rank 2 doubles T_π."""
        branch_data = modular_branch_data()
        table = surface_degree_table(branch_data, 2)
        for chi in Z5.characters:
            self.assertEqual(2 * t_pi_surface(branch_data, chi), t_pi_general(branch_data, table, chi))

    def test_first_chern_class(self):
        """Test that deg(c₁(𝒢) ∩ [y]) adds g(ψ, y)·deg(c₁(𝒢) ∩ [y])."""
        branch_data = modular_branch_data()
        table = surface_degree_table(branch_data, 1, {"D0": 3})
        self.assertEqual(Fraction(7, 5) - Fraction(3, 5), t_pi_general(branch_data, table, chi0_power(1)))

    def test_fuzzed_structure_sheaf(self):
        """Test that the general formula specializes to the surface formula on random branch data."""
        for seed in range(20):
            branch_data = fuzz_branch_data(seed)
            table = surface_degree_table(branch_data)
            for chi in branch_data.group.characters:
                self.assertEqual(t_pi_surface(branch_data, chi), t_pi_general(branch_data, table, chi))

    def test_higher_dimension(self):
        """Test the formula on a relative surface, d = 2, with one ramified component."""
        component = BranchComponent("y", inertia_order=5, inertia_exponent=4)
        branch_data = BranchData(Z5, (component,), dimension=2)
        degrees = {((0,), 0): 1, ((0,), 1): 2, ((0,), 2): 3, ((0, 0), 0): 4, ((0, 0), 1): 5, ((0, 0, 0), 0): 6}
        table = DegreeTable(2, 1, degrees)
        g = Fraction(-1, 5)
        expected = g * (1 + 2 + 3) + g**2 / 2 * (4 + 5) + g**3 / 6 * 6
        self.assertEqual(expected, t_pi_general(branch_data, table, chi0_power(1)))

    def test_incomplete_table(self):
        """Test that a missing degree is reported."""
        branch_data = modular_branch_data()
        table = DegreeTable(1, 1, {((0,), 0): 1})
        self.assertRaises(IncompleteDataError, t_pi_general, branch_data, table, chi0_power(1))

    def test_unramified_character_needs_no_degrees(self):
        """Test that the trivial character gives 0 without looking at the table."""
        self.assertEqual(0, t_pi_general(modular_branch_data(), DegreeTable(1, 1, {}), Z5.trivial_character))

    def test_dimension_mismatch(self):
        """Test that the table must be for the same relative dimension."""
        table = DegreeTable(2, 1, {})
        self.assertRaises(InputError, t_pi_general, modular_branch_data(), table, Z5.trivial_character)


class TPiFunctionTest(unittest.TestCase):
    """Unit tests for T as character function."""

    def test_structure_sheaf(self):
        """Test that without degree table the function is T_π."""
        self.assertEqual(Fraction(7, 5), t_pi_function(modular_branch_data())(chi0_power(1)))

    def test_sheaf(self):
        """Test that with a degree table the function is T_(π,𝒢)."""
        branch_data = modular_branch_data()
        function = t_pi_function(branch_data, surface_degree_table(branch_data, 2))
        self.assertEqual(Fraction(14, 5), function(chi0_power(1)))


class IntegralityCheckTest(unittest.TestCase):
    """Unit tests for the integrality of (#G)^(d+1)·T."""

    def test_modular_data(self):
        """Test that 25·T is integral on the modular data."""
        report = integrality_check(modular_branch_data())
        self.assertTrue(report.passed)
        self.assertEqual(25, report.scale)
        self.assertEqual(35, report.scale * report.values[chi0_power(1)])

    def test_trivial_cover(self):
        """Test that an unramified cover gives T = 0 everywhere."""
        report = integrality_check(BranchData(Z5, (BranchComponent("y", self_intersection=-1),)))
        self.assertTrue(report.passed)
        self.assertEqual({0}, set(report.values.values()))

    def test_fuzzed_branch_data(self):
        """Test that T is integral after scaling on random valid branch data."""
        for seed in range(100):
            self.assertTrue(integrality_check(fuzz_branch_data(seed)).passed, f"seed {seed}")

    def test_violation(self):
        """Test that a violation is reported for a degree table that no sheaf has."""
        branch_data = modular_branch_data()
        table = DegreeTable(1, 1, {((0,), 0): Fraction(1, 7), ((0,), 1): 0, ((0, 0), 0): 0})
        with self.assertLogs("cubictk.model.riemann_roch.localized", "WARNING"):
            report = integrality_check(branch_data, table)
        self.assertFalse(report.passed)
        self.assertEqual(4, len(report.violations))
