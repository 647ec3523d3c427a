"""Home folder of the user, where the config file lives."""

import os
from pathlib import Path


def home() -> Path:
    """Return the folder for the config file; CUBICTK_HOME overrides the home folder."""
    return Path(folder).expanduser() if (folder := os.environ.get("CUBICTK_HOME")) else Path.home()
