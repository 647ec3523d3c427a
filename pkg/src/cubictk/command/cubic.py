"""Commands on n-cubic structures."""

import logging
from argparse import Namespace

from cubictk.errors import InputError
from cubictk.model.cubic.conditions import is_n_cubic
from cubictk.model.cubic.kernel import kernel_annihilator_bound, kernel_is_trivial_for_prime_order
from cubictk.model.group.abelian import FiniteAbelianGroup
from cubictk.model.group.hom import augmentation_element
from cubictk.persistence.codec import decode_table, encode_character, encode_group
from cubictk.persistence.json_file import load_json
from cubictk.ui.report import VANDIVER_ASSUMPTION, Outcome

LOGGER = logging.getLogger(__name__)


def check_cubic(args: Namespace) -> Outcome:
    """Check the cubic conditions on the table, after applying λ_(s_n) when asked."""
    table = decode_table(load_json(args.table))
    if args.augment is not None:
        if table.power.n != 1:
            message = f"--augment needs a table on G, got a table on G^{table.power.n}"
            raise InputError(message)
        table = table.lambda_z(augmentation_element(table.power.group, args.augment))
        LOGGER.info("applied λ_(s_%d)", args.augment)
    verdict = is_n_cubic(table)
    outputs = {
        "group": encode_group(table.power.group),
        "n": table.power.n,
        "rigid": verdict.rigid,
        "symmetric": verdict.symmetric,
        "cocycle": verdict.cocycle,
        "is_n_cubic": verdict.is_n_cubic,
        "witnesses": {name: encode_character(witness) for name, witness in sorted(verdict.witnesses.items())},
    }
    return Outcome(outputs)


def kernel_bound(args: Namespace) -> Outcome:
    """Bound the exponent of the kernel of Θ_n."""
    group = FiniteAbelianGroup(args.group)
    vandiver = args.assume_vandiver
    outputs = {
        "group": encode_group(group),
        "n": args.n,
        "bound": kernel_annihilator_bound(args.n, group, vandiver_mode=vandiver),
        "trivial": kernel_is_trivial_for_prime_order(args.n, group, vandiver_mode=vandiver),
    }
    return Outcome(outputs, (VANDIVER_ASSUMPTION,) if vandiver else ())
