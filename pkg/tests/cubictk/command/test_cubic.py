"""Unit tests for the commands on n-cubic structures."""

from cubictk.command.cubic import check_cubic, kernel_bound
from cubictk.errors import InputError, UnknownValueError
from cubictk.ui.report import VANDIVER_ASSUMPTION

from ...base import CommandTestCase, parse

# The table of 2 + [g] in ℚ[ℤ/3]
GROUP_RING_TABLE = {
    "kind": "group_ring",
    "group": [3],
    "n": 1,
    "element": [{"element": [0], "coefficient": "2"}, {"element": [1], "coefficient": "1"}],
}


class CheckCubicTest(CommandTestCase):
    """Unit tests for the check-cubic command."""

    def test_not_rigid(self):
        """Test that 2 + [g] is not rigid, because its value at the trivial character is 3."""
        outcome = check_cubic(parse("check-cubic", self.json_file(GROUP_RING_TABLE)))
        self.assertFalse(outcome.outputs["rigid"])
        self.assertFalse(outcome.outputs["is_n_cubic"])
        self.assertEqual({"rigid": [[0]]}, outcome.outputs["witnesses"])
        self.assertEqual([3], outcome.outputs["group"])

    def test_augment(self):
        """Test that applying λ_(s_2) gives a 2-cubic table."""
        outcome = check_cubic(parse("check-cubic", self.json_file(GROUP_RING_TABLE), "--augment", "2"))
        self.assertEqual(2, outcome.outputs["n"])
        self.assertTrue(outcome.outputs["is_n_cubic"])
        self.assertEqual({}, outcome.outputs["witnesses"])

    def test_augment_needs_table_on_group(self):
        """Test that λ_(s_n) is only applied to tables on G."""
        values = [{"character": [[a], [b]], "value": "1"} for a in range(2) for b in range(2)]
        table = {"group": [2], "n": 2, "values": values}
        self.assertRaises(InputError, check_cubic, parse("check-cubic", self.json_file(table), "--augment", "2"))


class KernelBoundTest(CommandTestCase):
    """Unit tests for the kernel-bound command."""

    def test_small_n(self):
        """Test that the kernel is trivial for n ≤ 5."""
        outcome = kernel_bound(parse("kernel-bound", "--n", "5", "--group", "2,6"))
        self.assertEqual({"group": [2, 6], "n": 5, "bound": 1, "trivial": True}, outcome.outputs)
        self.assertEqual((), outcome.assumptions)

    def test_vandiver(self):
        """Test that 691 divides e(12), so it bounds the kernel of Θ_14 for #G = 691."""
        outcome = kernel_bound(parse("kernel-bound", "--n", "14", "--group", "691", "--assume-vandiver"))
        self.assertEqual(691, outcome.outputs["bound"])
        self.assertTrue(outcome.outputs["trivial"])
        self.assertEqual((VANDIVER_ASSUMPTION,), outcome.assumptions)

    def test_unknown_without_vandiver(self):
        """Test that e(3) is unknown without the Vandiver assumption."""
        self.assertRaises(UnknownValueError, kernel_bound, parse("kernel-bound", "--n", "7", "--group", "5"))
