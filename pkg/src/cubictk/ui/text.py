"""Output for the user."""

import logging
from typing import Final

from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from cubictk.metadata import NAME

from .style import theme

console = Console(theme=theme, stderr=True)

LOG_LEVELS: Final = (logging.WARNING, logging.INFO, logging.DEBUG)

HELP_HINT: Final[str] = f"[secondary]Type `{NAME.lower()} -h` for more information.[/secondary]"


def setup_logging(verbosity: int) -> None:
    """Send the log records of cubictk to the console; each -v lowers the threshold one level."""
    handler = RichHandler(console=console, show_path=False, markup=False)
    logger = logging.getLogger("cubictk")
    logger.handlers = [handler]
    logger.setLevel(LOG_LEVELS[min(verbosity, len(LOG_LEVELS) - 1)])


def show_error(message: str) -> None:
    """Show the error message."""
    console.print(wrapped(f"Error: {message}", "error") + HELP_HINT)


def passed_or_failed(passed: bool) -> str:
    """Return a styled pass or fail marker."""
    return wrapped("passed", "passed", postfix="") if passed else wrapped("FAILED", "failed", postfix="")


def summary_table(title: str, rows: list[tuple[str, str, bool, str]]) -> Table:
    """Return a table with one row per check: name, details, outcome and wall time."""
    table = Table(title=title)
    table.add_column("Check")
    table.add_column("Details", style="secondary")
    table.add_column("Outcome")
    table.add_column("Seconds", justify="right", style="value")
    for name, details, passed, seconds in rows:
        table.add_row(name, details, passed_or_failed(passed), seconds)
    return table


def wrapped(text: str, style: str, postfix: str = "\n") -> str:
    """Return the text wrapped with the style."""
    return f"[{style}]{text}[/{style}]{postfix}"
