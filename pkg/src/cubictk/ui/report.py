"""Run reports: what a command was asked, what it computed, and which assumptions it used."""

from __future__ import annotations

import sys
from argparse import Namespace
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any

from cubictk.metadata import VERSION

VANDIVER_ASSUMPTION = "vandiver"
REPORT_OPTIONS = frozenset({"command", "output", "timing", "verbose"})


@dataclass(frozen=True)
class RunReport:
    """The report of one command; equal inputs and version give byte-identical reports without wall time."""

    command: str
    argv: tuple[str, ...]
    inputs: dict[str, Any] = field(default_factory=dict)
    outputs: dict[str, Any] = field(default_factory=dict)
    assumptions: tuple[str, ...] = ()
    exit_code: int = 0
    version: str = VERSION
    error: str | None = None
    wall_time: str | None = None  # Seconds, as decimal string

    def without_wall_time(self) -> RunReport:
        """Return the report without the wall time, for comparing runs."""
        return replace(self, wall_time=None)


def write_report(text: str) -> None:
    """Write the report to stdout, unchanged so that it stays byte-identical."""
    sys.stdout.write(text)
    sys.stdout.flush()


@dataclass(frozen=True)
class Outcome:
    """What a command computed; a failed outcome is a mathematical failure and exits with code 1."""

    outputs: dict[str, Any]
    assumptions: tuple[str, ...] = ()
    passed: bool = True
    failure: str = ""


def report_inputs(args: Namespace) -> dict[str, Any]:
    """Return the parsed arguments that determine the outputs, with paths and tuples made JSON-friendly."""
    inputs: dict[str, Any] = {}
    for name, value in sorted(vars(args).items()):
        if name in REPORT_OPTIONS:
            continue
        if isinstance(value, Path):
            value = str(value)  # noqa: PLW2901
        elif isinstance(value, tuple):
            value = list(value)  # noqa: PLW2901
        inputs[name] = value
    return inputs
