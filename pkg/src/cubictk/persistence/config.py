"""Config file parser.

All options of the config file are positive whole numbers. Some also accept ``auto``, meaning that the engine picks a
value depending on the input.
"""

import os
from argparse import ArgumentParser
from configparser import ConfigParser, Error
from dataclasses import dataclass
from io import StringIO
from pathlib import Path
from typing import Final, NoReturn

from .folder import home

AUTO: Final = "auto"
BUDGET_VARIABLE: Final = "CUBICTK_BUDGET"


@dataclass(frozen=True)
class IntegerOption:
    """Configuration option with a positive whole number as value."""

    default_value: str
    allows_auto: bool = False

    def accepts(self, value: str) -> bool:
        """Return whether the value is allowed for this option."""
        return (self.allows_auto and value == AUTO) or is_positive_integer(value)

    def allowed_values(self) -> str:
        """Describe the allowed values."""
        return "positive whole numbers" + (f" or '{AUTO}'" if self.allows_auto else "")


def is_positive_integer(value: str) -> bool:
    """Return whether the value is a positive whole number."""
    return value.isdigit() and int(value) > 0


# Sections of the config file, mapping option names to options
CONFIG_SCHEMA: Final[dict[str, dict[str, IntegerOption]]] = dict(
    classgroup=dict(
        max_r=IntegerOption("23"),
        factor_base_bound=IntegerOption(AUTO, allows_auto=True),
        budget=IntegerOption("4000"),
    ),
    analytic=dict(max_r=IntegerOption("200")),
    gauss=dict(degree_budget=IntegerOption("60")),
)
CONFIG_FILENAME = home() / ".cubictk.cfg"


def validate_config(config_parser: ConfigParser, argument_parser: ArgumentParser, config_filename: Path) -> None:
    """Check every section and option of the config against the schema, and exit with an error on the first failure."""

    def error(message: str) -> NoReturn:
        argument_parser.error(f"While reading from '{config_filename}': {message}")

    for section in config_parser.sections():
        if (section_schema := CONFIG_SCHEMA.get(section)) is None:
            error(f"unknown section '{section}'. Allowed sections are: {', '.join(CONFIG_SCHEMA)}.")
        for option_name, value in config_parser[section].items():
            if (option := section_schema.get(option_name)) is None:
                error(
                    f"unknown option '{option_name}' in section '{section}'. "
                    f"Allowed options are: {', '.join(section_schema)}.",
                )
            if not option.accepts(value):
                error(
                    f"incorrect value '{value}' for option '{option_name}' in section '{section}'. "
                    f"Allowed values are {option.allowed_values()}.",
                )

def read_config(argument_parser: ArgumentParser, config_filename: Path = CONFIG_FILENAME) -> ConfigParser:
    """Read the config file, validate it, and exit with an error message if it doesn't pass.

    The environment variable CUBICTK_BUDGET overrides the class group budget of the config file.
    """
    parser = ConfigParser()
    try:
        with config_filename.open("r", encoding="utf-8") as config_file:
            parser.read_file(config_file)
    except FileNotFoundError:
        pass
    except (OSError, Error) as reason:
        argument_parser.error(str(reason))
    validate_config(parser, argument_parser, config_filename)
    _add_defaults(parser)
    if (budget := os.environ.get(BUDGET_VARIABLE)) is not None:
        if not is_positive_integer(budget):
            argument_parser.error(f"incorrect value '{budget}' for {BUDGET_VARIABLE}; expected a positive number")
        parser["classgroup"]["budget"] = budget
    return parser


def write_config(
    argument_parser: ArgumentParser, config_parser: ConfigParser, config_filename: Path = CONFIG_FILENAME
) -> None:
    """Write the config file, and exit with an error message if writing it fails."""
    try:
        config_file_text = StringIO()
        config_parser.write(config_file_text, space_around_delimiters=False)
        with config_filename.open("w", encoding="utf-8") as config_file:
            config_file.write(config_file_text.getvalue())
    except OSError as reason:
        argument_parser.error(str(reason))


def default_config() -> ConfigParser:
    """Return the default configuration."""
    parser = ConfigParser()
    _add_defaults(parser)
    return parser


def _add_defaults(parser: ConfigParser) -> None:
    """Add the default configuration to the parser."""
    for section, section_schema in CONFIG_SCHEMA.items():
        if section not in parser.sections():
            parser.add_section(section)
        for option_name, option in section_schema.items():
            if option_name not in parser[section]:
                parser[section][option_name] = option.default_value
