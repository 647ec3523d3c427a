"""Main module for the application."""

import logging
import sys
from argparse import ArgumentParser, Namespace
from collections.abc import Sequence
from configparser import ConfigParser
from time import perf_counter
from typing import Any

from .command.acceptance import acceptance
from .command.bernoulli import bernoulli
from .command.classgroup import classgroup, pchi
from .command.configure import configure
from .command.cubic import check_cubic, kernel_bound
from .command.modular import bsd_check, modular_class
from .command.replay import replay
from .command.riemann_roch import mainthm_idele, telescope, tpi
from .command.stickelberger import gauss, herbrand, hminus, theta2
from .errors import InputError, MathematicalFailure
from .metadata import VERSION
from .persistence.codec import encode_report
from .persistence.config import default_config, read_config
from .persistence.json_file import dump_json, dumps_canonical
from .ui.cli import create_argument_parser, parse_arguments
from .ui.report import Outcome, RunReport, report_inputs, write_report
from .ui.text import setup_logging, show_error

LOGGER = logging.getLogger(__name__)

MATHEMATICAL_FAILURE, INPUT_ERROR = 1, 2


class CLI:
    """Command-line interface commands, arguments, and options."""

    def __init__(self, argv: Sequence[str]) -> None:
        argument_parser = create_argument_parser(default_config())
        self.config: ConfigParser = read_config(argument_parser)
        self.argument_parser: ArgumentParser = create_argument_parser(self.config)
        self.argv = tuple(argv)
        self.args: Namespace = parse_arguments(self.argument_parser, self.argv)


def dispatch(args: Namespace) -> Outcome:
    """Run the computational command."""
    match args.command:
        case "check-cubic":
            return check_cubic(args)
        case "kernel-bound":
            return kernel_bound(args)
        case "classgroup":
            return classgroup(args)
        case "pchi":
            return pchi(args)
        case "theta2":
            return theta2(args)
        case "herbrand":
            return herbrand(args)
        case "hminus":
            return hminus(args)
        case "gauss":
            return gauss(args)
        case "bernoulli":
            return bernoulli(args)
        case "tpi":
            return tpi(args)
        case "mainthm-idele":
            return mainthm_idele(args)
        case "telescope":
            return telescope(args)
        case "modular-class":
            return modular_class(args)
        case "bsd-check":
            return bsd_check(args)
        case "acceptance":
            return acceptance(args)
        case _:  # The only other computational command is "replay"
            return replay(args, run)


def execute(args: Namespace, argv: Sequence[str]) -> RunReport:
    """Run the command and turn its outcome, or the error it raised, into a report."""
    setup_logging(args.verbose)
    start = perf_counter()
    outputs: dict[str, Any] = {}
    assumptions: tuple[str, ...] = ()
    exit_code = 0
    error: str | None = None
    try:
        outcome = dispatch(args)
    except MathematicalFailure as reason:
        exit_code, error = MATHEMATICAL_FAILURE, f"{type(reason).__name__}: {reason}"
    except InputError as reason:
        exit_code, error = INPUT_ERROR, f"{type(reason).__name__}: {reason}"
    else:
        outputs, assumptions = outcome.outputs, outcome.assumptions
        if not outcome.passed:
            exit_code, error = MATHEMATICAL_FAILURE, outcome.failure or f"{args.command} failed"
    if error:
        LOGGER.debug("%s exited with %d: %s", args.command, exit_code, error)
    wall_time = f"{perf_counter() - start:.3f}" if args.timing else None
    inputs = report_inputs(args)
    return RunReport(args.command, tuple(argv), inputs, outputs, assumptions, exit_code, VERSION, error, wall_time)


def run(argv: Sequence[str]) -> RunReport:
    """Parse the arguments and run the computational command."""
    cli = CLI(argv)
    return execute(cli.args, cli.argv)


def main() -> None:
    """Run the main program."""
    cli = CLI(sys.argv[1:])
    if cli.args.command == "configure":
        configure(cli.argument_parser, cli.config, cli.args)
        return
    report = execute(cli.args, cli.argv)
    encoded = encode_report(report)
    write_report(dumps_canonical(encoded))
    if cli.args.output:
        dump_json(cli.args.output, encoded)
    if report.error:
        show_error(report.error)
    if report.exit_code:
        sys.exit(report.exit_code)
