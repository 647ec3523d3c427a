"""Unit tests for cubictk.

The tests import cubictk from the source folder. Only errors are logged, so that the progress messages of the class
group search don't clutter the test output.
"""

import logging
import sys
from pathlib import Path

SRC_FOLDER = Path(__file__).resolve().parent.parent / "src"

sys.path.insert(0, str(SRC_FOLDER))
logging.getLogger().setLevel(logging.ERROR)
