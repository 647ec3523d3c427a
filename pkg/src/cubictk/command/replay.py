"""Replay command."""

import logging
from argparse import Namespace
from collections.abc import Callable, Sequence

from cubictk.persistence.codec import decode_report, encode_report
from cubictk.persistence.json_file import dumps_canonical, load_json
from cubictk.ui.report import Outcome, RunReport

LOGGER = logging.getLogger(__name__)


def replay(args: Namespace, run: Callable[[Sequence[str]], RunReport]) -> Outcome:
    """Re-run the command of the report and compare the reports byte for byte, ignoring the wall time."""
    original = decode_report(load_json(args.report))
    LOGGER.info("replaying %s", " ".join(original.argv))
    rerun = run(original.argv)
    expected = dumps_canonical(encode_report(original.without_wall_time()))
    actual = dumps_canonical(encode_report(rerun.without_wall_time()))
    identical = expected == actual
    outputs = {"command": original.command, "identical": identical}
    if not identical:
        outputs["replayed"] = encode_report(rerun.without_wall_time())
    return Outcome(outputs, passed=identical, failure="" if identical else "the replayed report differs")
