"""Load and dump JSON."""

import errno
import json
import os
from pathlib import Path
from typing import Any, cast

from cubictk.errors import InputError


def load_json(json_file_path: Path, default: dict | None = None) -> dict:
    """Load the JSON from the file. Return default if file does not exist."""
    if json_file_path.exists():
        with json_file_path.open(encoding="utf-8") as json_file:
            try:
                contents = json.load(json_file)
            except json.JSONDecodeError as reason:
                message = f"'{json_file_path}' is not valid JSON: {reason}"
                raise InputError(message) from reason
        if not isinstance(contents, dict):
            message = f"'{json_file_path}' does not contain a JSON object"
            raise InputError(message)
        return cast(dict, contents)
    if default is None:
        raise FileNotFoundError(errno.ENOENT, os.strerror(errno.ENOENT), str(json_file_path))
    return default or {}


def dumps_canonical(contents: Any) -> str:  # noqa: ANN401
    """Return the JSON with sorted keys, two space indentation and a trailing newline, so equal contents are equal."""
    return json.dumps(contents, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def dump_json(json_file_path: Path, contents: dict | list) -> None:
    """Dump the JSON into the file in canonical form."""
    with json_file_path.open("w", encoding="utf-8") as json_file:
        json_file.write(dumps_canonical(contents))
