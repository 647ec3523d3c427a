"""Command-line interface."""

from argparse import ArgumentParser, ArgumentTypeError, Namespace
from collections.abc import Sequence
from configparser import ConfigParser
from pathlib import Path
from typing import TYPE_CHECKING

from rich_argparse import RichHelpFormatter
from sympy import isprime

from cubictk.metadata import README_URL, SUMMARY, VERSION
from cubictk.persistence.config import CONFIG_FILENAME

if TYPE_CHECKING:
    from argparse import _SubParsersAction

COMPUTATIONAL_COMMANDS = (
    "check-cubic",
    "kernel-bound",
    "classgroup",
    "pchi",
    "theta2",
    "herbrand",
    "hminus",
    "gauss",
    "bernoulli",
    "tpi",
    "mainthm-idele",
    "telescope",
    "modular-class",
    "bsd-check",
    "acceptance",
    "replay",
)


def check_positive(value: str) -> int:
    """Check that the value is a positive whole number."""
    if value.isdigit() and int(value) > 0:
        return int(value)
    message = f"'{value}' is not a positive whole number"
    raise ArgumentTypeError(message)


def check_non_negative(value: str) -> int:
    """Check that the value is a whole number ≥ 0."""
    if value.isdigit():
        return int(value)
    message = f"'{value}' is not a whole number ≥ 0"
    raise ArgumentTypeError(message)


def check_integer(value: str) -> int:
    """Check that the value is a whole number, possibly negative."""
    try:
        return int(value)
    except ValueError:
        message = f"'{value}' is not a whole number"
        raise ArgumentTypeError(message) from None


def check_prime(value: str) -> int:
    """Check that the value is a prime."""
    number = check_positive(value)
    if isprime(number):
        return number
    message = f"{number} is not a prime"
    raise ArgumentTypeError(message)


def check_integer_list(value: str) -> tuple[int, ...]:
    """Check that the value is a comma separated list of whole numbers; the empty string is the empty list."""
    return tuple(check_integer(item) for item in value.split(",")) if value.strip() else ()


def check_file(path_name: str) -> Path:
    """Check that the path is a file that exists."""
    path = Path(path_name)
    if not path.is_file():
        message = f"file '{path}' does not exist"
        raise ArgumentTypeError(message)
    return path


def check_factor_base_bound(value: str) -> int | None:
    """Check that the bound is a positive whole number or 'auto'."""
    return None if value == "auto" else check_positive(value)


class CommandBuilder:
    """Command builder."""

    def __init__(self, subparsers: "_SubParsersAction[ArgumentParser]", config: ConfigParser) -> None:
        self.subparsers = subparsers
        self.config = config

    def _add_command(self, command: str, description: str, command_help: str) -> ArgumentParser:
        """Add a command, with the report options that every computational command has."""
        parser = self.subparsers.add_parser(
            command, description=description, help=command_help, formatter_class=RichHelpFormatter
        )
        if command in COMPUTATIONAL_COMMANDS:
            self.add_report_arguments(parser)
        return parser

    def add_report_arguments(self, parser: ArgumentParser) -> None:
        """Add the verbosity, output and timing options."""
        parser.add_argument(
            "-v",
            "--verbose",
            action="count",
            default=0,
            help="log progress; repeat for more detail",
        )
        parser.add_argument(
            "-o",
            "--output",
            metavar="{path}",
            type=Path,
            help="write the report to the file as well as to stdout",
        )
        parser.add_argument(
            "--timing", action="store_true", help="include the wall time in the report; timed reports differ per run"
        )

    def add_r_argument(self, parser: ArgumentParser, help_text: str = "the odd prime r") -> None:
        """Add the prime r."""
        parser.add_argument("--r", metavar="{r}", required=True, type=check_prime, help=help_text)

    def add_p_argument(self, parser: ArgumentParser, help_text: str) -> None:
        """Add the prime p."""
        parser.add_argument("--p", metavar="{p}", required=True, type=check_prime, help=help_text)

    def add_precision_argument(self, parser: ArgumentParser) -> None:
        """Add the ℓ-adic precision."""
        parser.add_argument(
            "--precision",
            metavar="{k}",
            type=check_positive,
            default=3,
            help="compute ℓ-adic numbers mod ℓ^k; default: 3",
        )

    def add_class_group_arguments(self, parser: ArgumentParser) -> None:
        """Add the options of the class group computation, with defaults from the config file."""
        default_bound = self.config.get("classgroup", "factor_base_bound")
        parser.add_argument(
            "--factor-base-bound",
            metavar="{bound}",
            type=check_factor_base_bound,
            default=check_factor_base_bound(default_bound),
            help=f"norm bound of the factor base, or 'auto' for max(200, 2r²); default: {default_bound}",
        )
        default_budget = self.config.get("classgroup", "budget")
        parser.add_argument(
            "--budget",
            metavar="{candidates}",
            type=check_positive,
            default=int(default_budget),
            help=f"number of candidate elements to try in the relation search; default: {default_budget}",
        )
        default_max_r = self.config.get("classgroup", "max_r")
        parser.add_argument(
            "--max-r",
            metavar="{r}",
            type=check_positive,
            default=int(default_max_r),
            help=f"largest r for which class groups are computed; default: {default_max_r}",
        )

    def add_analytic_max_r_argument(self, parser: ArgumentParser) -> None:
        """Add the range of the analytic class number formula."""
        default = self.config.get("analytic", "max_r")
        parser.add_argument(
            "--analytic-max-r",
            metavar="{r}",
            type=check_positive,
            default=int(default),
            help=f"largest r for which h⁻ is computed; default: {default}",
        )

    def add_degree_budget_argument(self, parser: ArgumentParser) -> None:
        """Add the degree budget of Gauss sum computations."""
        default = self.config.get("gauss", "degree_budget")
        parser.add_argument(
            "--degree-budget",
            metavar="{degree}",
            type=check_positive,
            default=int(default),
            help=f"largest degree (p − 1)(r − 1) of ℚ(ζ_pr) to compute in; default: {default}",
        )

    def add_vandiver_argument(self, parser: ArgumentParser) -> None:
        """Add the Vandiver assumption, which is never read from the config file."""
        parser.add_argument(
            "--assume-vandiver",
            action="store_true",
            help="assume Vandiver's conjecture, so that e(k) is known for odd k",
        )

    def add_branch_data_arguments(self, parser: ArgumentParser) -> None:
        """Add the branch data file and the optional degree table."""
        parser.add_argument("branch_data", metavar="{branch data}", type=check_file, help="JSON file with branch data")
        parser.add_argument(
            "--degrees",
            metavar="{path}",
            type=check_file,
            help="JSON file with the degree table of a locally free sheaf; default: the structure sheaf of a surface",
        )
        parser.add_argument(
            "--complete-fibers",
            action="store_true",
            help="the listed components form whole fibers, so check that every component meets its fiber with degree "
            '0; also enabled by "complete_fibers": true in the branch data',
        )


class ConfigureCommandBuilder(CommandBuilder):
    """Configure command builder."""

    def add_command(self) -> None:
        """Add a configure command."""
        command_help = (
            "configure options, for example `%(prog)s configure --budget 8000` to make the relation search try "
            "more candidates by default"
        )
        description = f"Configure options and save them in {CONFIG_FILENAME!s}."
        parser = self._add_command("configure", description, command_help)
        self.add_class_group_arguments(parser)
        self.add_analytic_max_r_argument(parser)
        self.add_degree_budget_argument(parser)


class CheckCubicCommandBuilder(CommandBuilder):
    """Check-cubic command builder."""

    def add_command(self) -> None:
        """Add a command to check the cubic conditions."""
        parser = self._add_command(
            "check-cubic",
            "Check whether a character table is rigid, symmetric and a cocycle.",
            "check the cubic conditions on a character table, for example `%(prog)s check-cubic table.json`",
        )
        parser.add_argument("table", metavar="{table}", type=check_file, help="JSON file with the character table")
        parser.add_argument(
            "--augment",
            metavar="{n}",
            type=check_positive,
            help="apply λ_(s_n) to a table on G first; the result is n-cubic for every unit",
        )


class KernelBoundCommandBuilder(CommandBuilder):
    """Kernel-bound command builder."""

    def add_command(self) -> None:
        """Add a command to bound the kernel of Θ_n."""
        parser = self._add_command(
            "kernel-bound",
            "Compute an integer annihilating the kernel of Θ_n on Pic(ℤ[G]).",
            "bound the kernel of Θ_n, for example `%(prog)s kernel-bound --n 3 --group 2,2`",
        )
        parser.add_argument("--n", metavar="{n}", required=True, type=check_positive, help="the n of Θ_n, at least 2")
        parser.add_argument(
            "--group",
            metavar="{factors}",
            required=True,
            type=check_integer_list,
            help="invariant factors of G, comma separated",
        )
        self.add_vandiver_argument(parser)


class ClassGroupCommandBuilder(CommandBuilder):
    """Classgroup command builder."""

    def add_command(self) -> None:
        """Add a command to compute a class group."""
        parser = self._add_command(
            "classgroup",
            "Compute the class group of ℤ[ζ_r], certified by the analytic class number h⁻.",
            "compute a cyclotomic class group, for example `%(prog)s classgroup --r 23`",
        )
        self.add_r_argument(parser)
        self.add_class_group_arguments(parser)
        parser.add_argument("--invert-two", action="store_true", help="compute the class group of ℤ[ζ_r, 1/2]")
        parser.add_argument(
            "--annihilation",
            action="store_true",
            help="also certify that θ₁ annihilates each generator by an explicit generator of θ₁·𝔞",
        )


class PChiCommandBuilder(CommandBuilder):
    """Pchi command builder."""

    def add_command(self) -> None:
        """Add a command to find the prime P_χ."""
        parser = self._add_command(
            "pchi",
            "Find the prime P_χ of ℤ[ζ_r] above p singled out by the character χ of order r mod p.",
            "find the prime P_χ, for example `%(prog)s pchi --p 241 --r 5`",
        )
        self.add_p_argument(parser, "the prime p ≡ 1 mod r")
        self.add_r_argument(parser)
        parser.add_argument(
            "--exponent",
            metavar="{e}",
            type=check_positive,
            default=1,
            help="the character sends the least primitive root mod p to ζ_r^e; default: 1",
        )
        parser.add_argument("--class", dest="with_class", action="store_true", help="also compute the class of P_χ")
        self.add_class_group_arguments(parser)


class Theta2CommandBuilder(CommandBuilder):
    """Theta2 command builder."""

    def add_command(self) -> None:
        """Add a command to compute the coefficients of θ₂."""
        parser = self._add_command(
            "theta2",
            "Compute the coefficients of the modified quadratic Stickelberger element θ₂ in ℤ_ℓ.",
            "compute θ₂, for example `%(prog)s theta2 --p 241 --r 5`",
        )
        self.add_p_argument(parser, "the prime p ≡ 1 mod 24r")
        self.add_r_argument(parser)
        self.add_precision_argument(parser)
        parser.add_argument(
            "--prime",
            metavar="{ℓ}",
            type=check_prime,
            help="the prime ℓ of the coefficients; default: r",
        )


class HerbrandCommandBuilder(CommandBuilder):
    """Herbrand command builder."""

    def add_command(self) -> None:
        """Add a command to apply Herbrand's criterion."""
        parser = self._add_command(
            "herbrand",
            "Test which ω^(1−k) eigenspaces of the r-part of Cl(ℤ[ζ_r]) may be nontrivial.",
            "apply Herbrand's criterion, for example `%(prog)s herbrand --r 37`",
        )
        self.add_r_argument(parser, "the prime r ≥ 5")
        parser.add_argument(
            "--k",
            metavar="{k}",
            type=check_positive,
            help="a single even index 2 ≤ k ≤ r − 3; default: all",
        )
        parser.add_argument(
            "--eigenspaces",
            action="store_true",
            help="also compute the eigenspaces of the r-part of the class group and check them against B_k",
        )
        self.add_class_group_arguments(parser)


class HMinusCommandBuilder(CommandBuilder):
    """Hminus command builder."""

    def add_command(self) -> None:
        """Add a command to compute the relative class number."""
        parser = self._add_command(
            "hminus",
            "Compute the relative class number h⁻ of ℚ(ζ_r) and the irregular indices of r analytically.",
            "compute h⁻, for example `%(prog)s hminus --r 23`",
        )
        self.add_r_argument(parser)
        self.add_analytic_max_r_argument(parser)


class GaussCommandBuilder(CommandBuilder):
    """Gauss command builder."""

    def add_command(self) -> None:
        """Add a command to check Gauss sums."""
        parser = self._add_command(
            "gauss",
            "Compute a Gauss sum τ(ψ) exactly and check its norm and the factorization of τ(ψ)^r.",
            "check a Gauss sum, for example `%(prog)s gauss --p 11 --r 5`",
        )
        self.add_p_argument(parser, "the prime p ≡ 1 mod r")
        self.add_r_argument(parser)
        parser.add_argument(
            "--exponent",
            metavar="{e}",
            type=check_non_negative,
            default=1,
            help="ψ sends the least primitive root mod p to ζ_r^e; default: 1",
        )
        self.add_degree_budget_argument(parser)


class BernoulliCommandBuilder(CommandBuilder):
    """Bernoulli command builder."""

    def add_command(self) -> None:
        """Add a command to compute Bernoulli numbers."""
        parser = self._add_command(
            "bernoulli",
            "Compute the Bernoulli number B_k, the number e(k), and irregular pairs.",
            "compute Bernoulli numbers, for example `%(prog)s bernoulli --k 12 --e-of-k`",
        )
        parser.add_argument("--k", metavar="{k}", required=True, type=check_non_negative, help="the index k")
        parser.add_argument(
            "--e-of-k",
            action="store_true",
            help="also compute e(k): |numerator(B_k/k)| for even k; odd k ≥ 3 needs the Vandiver assumption",
        )
        parser.add_argument(
            "--irregular-below",
            metavar="{bound}",
            type=check_positive,
            help="also list the irregular pairs (r, k) with r below the bound",
        )
        self.add_vandiver_argument(parser)


class TPiCommandBuilder(CommandBuilder):
    """Tpi command builder."""

    def add_command(self) -> None:
        """Add a command to evaluate the localized Riemann-Roch function."""
        parser = self._add_command(
            "tpi",
            "Evaluate the localized Riemann-Roch function T on every character and check its integrality.",
            "evaluate T, for example `%(prog)s tpi branch.json`",
        )
        self.add_branch_data_arguments(parser)
        parser.add_argument(
            "--prime",
            metavar="{prime}",
            type=check_prime,
            help="only count the components above the prime; default: all",
        )


class MainTheoremIdeleCommandBuilder(CommandBuilder):
    """Mainthm-idele command builder."""

    def add_command(self) -> None:
        """Add a command to compute the idèle of the Euler characteristic."""
        parser = self._add_command(
            "mainthm-idele",
            "Compute the idèle that presents Θ of the equivariant Euler characteristic of a tame cover.",
            "compute the idèle, for example `%(prog)s mainthm-idele branch.json --squared`",
        )
        self.add_branch_data_arguments(parser)
        parser.add_argument(
            "--squared",
            action="store_true",
            help="present Θ(2·χ̄), which needs no parity condition",
        )
        parser.add_argument(
            "--euler-characteristic",
            metavar="{χ}",
            type=check_integer,
            help="the Euler characteristic χ(Y, 𝒢); the unsquared form needs it to be even",
        )


class TelescopeCommandBuilder(CommandBuilder):
    """Telescope command builder."""

    def add_command(self) -> None:
        """Add a command to check the telescoping identity."""
        parser = self._add_command(
            "telescope",
            "Expand Σ_I (−1)^#I·(Σ_(i ∈ I) X_i)^q symbolically; it vanishes when q < n.",
            "check the telescoping identity, for example `%(prog)s telescope --n 4 --q 3`",
        )
        parser.add_argument("--n", metavar="{n}", required=True, type=check_positive, help="the number of variables")
        parser.add_argument("--q", metavar="{q}", required=True, type=check_non_negative, help="the degree")


class ModularClassCommandBuilder(CommandBuilder):
    """Modular-class command builder."""

    def add_command(self) -> None:
        """Add a command to compute the Steinitz class of the lattice of cusp forms."""
        parser = self._add_command(
            "modular-class",
            "Compute the rank and the Steinitz class of the χ-part of the lattice of weight 2 cusp forms on Γ₁(p).",
            "compute the lattice class, for example `%(prog)s modular-class --p 241 --r 5`",
        )
        self.add_p_argument(parser, "the prime p ≡ 1 mod 24r")
        self.add_r_argument(parser)
        parser.add_argument(
            "--exponents",
            metavar="{exponents}",
            type=check_integer_list,
            help="evaluate the characters χ(g) = ζ_r^e for these e only, comma separated; default: all",
        )
        self.add_precision_argument(parser)
        self.add_class_group_arguments(parser)


class BsdCheckCommandBuilder(CommandBuilder):
    """Bsd-check command builder."""

    def add_command(self) -> None:
        """Add a command to check the class relation with Ш and the Mordell-Weil group."""
        parser = self._add_command(
            "bsd-check",
            "Check conj(θ₂·[P_χ]) = s(Ш) − conj(s(MW)) − s(MW) in Cl(ℤ[ζ_r, 1/2]).",
            "check the class relation, for example `%(prog)s bsd-check --p 241 --r 5`",
        )
        self.add_p_argument(parser, "the prime p ≡ 1 mod 24r")
        self.add_r_argument(parser)
        for name, label in (("sha", "Ш"), ("mw", "the Mordell-Weil group")):
            parser.add_argument(
                f"--{name}",
                metavar="{path}",
                type=check_file,
                help=f"JSON file with the class of {label} in Cl(ℤ[ζ_r, 1/2]); default: the trivial class",
            )
        parser.add_argument(
            "--exponent",
            metavar="{e}",
            type=check_positive,
            default=1,
            help="the character sends the least primitive root mod p to ζ_r^e; default: 1",
        )
        self.add_precision_argument(parser)
        self.add_class_group_arguments(parser)


class AcceptanceCommandBuilder(CommandBuilder):
    """Acceptance command builder."""

    def add_command(self) -> None:
        """Add a command to run the acceptance suite."""
        parser = self._add_command(
            "acceptance",
            "Re-run every acceptance computation and report the outcomes.",
            "run the acceptance suite, for example `%(prog)s acceptance --quick`",
        )
        parser.add_argument(
            "--quick",
            action="store_true",
            help="skip the checks that need the class group of ℤ[ζ_23], which take minutes",
        )


class ReplayCommandBuilder(CommandBuilder):
    """Replay command builder."""

    def add_command(self) -> None:
        """Add a command to replay a report."""
        parser = self._add_command(
            "replay",
            "Re-run the command of a report and compare the new report with it, ignoring the wall time.",
            "replay a report, for example `%(prog)s replay report.json`",
        )
        parser.add_argument("report", metavar="{report}", type=check_file, help="JSON file with the report")


def create_argument_parser(config: ConfigParser) -> ArgumentParser:
    """Create the argument parser."""
    epilog = f"See {README_URL} for more information."
    argument_parser = ArgumentParser(
        prog="cubictk", description=SUMMARY, epilog=epilog, formatter_class=RichHelpFormatter
    )
    argument_parser.add_argument("-V", "--version", action="version", version=f"v{VERSION}")
    command_help = "type `%(prog)s {command} --help` for more information on a command"
    subparsers = argument_parser.add_subparsers(dest="command", title="commands", help=command_help, required=True)
    for builder in (
        ConfigureCommandBuilder,
        CheckCubicCommandBuilder,
        KernelBoundCommandBuilder,
        ClassGroupCommandBuilder,
        PChiCommandBuilder,
        Theta2CommandBuilder,
        HerbrandCommandBuilder,
        HMinusCommandBuilder,
        GaussCommandBuilder,
        BernoulliCommandBuilder,
        TPiCommandBuilder,
        MainTheoremIdeleCommandBuilder,
        TelescopeCommandBuilder,
        ModularClassCommandBuilder,
        BsdCheckCommandBuilder,
        AcceptanceCommandBuilder,
        ReplayCommandBuilder,
    ):
        builder(subparsers, config).add_command()
    return argument_parser


def parse_arguments(argument_parser: ArgumentParser, argv: Sequence[str]) -> Namespace:
    """Parse and validate the command-line arguments."""
    namespace = argument_parser.parse_args(argv)
    if (output := getattr(namespace, "output", None)) and not output.resolve().parent.is_dir():
        argument_parser.error(f"cannot write the report to '{output}': the folder does not exist")
    return namespace
