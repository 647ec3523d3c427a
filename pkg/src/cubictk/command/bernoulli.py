"""Bernoulli number command."""

from argparse import Namespace

from cubictk.model.bernoulli import bernoulli as bernoulli_number
from cubictk.model.bernoulli import e_of_k, irregular_pairs
from cubictk.persistence.codec import encode_rational
from cubictk.ui.report import VANDIVER_ASSUMPTION, Outcome


def bernoulli(args: Namespace) -> Outcome:
    """Compute B_k and, when asked, e(k) and the irregular pairs below a bound."""
    outputs: dict[str, object] = {"k": args.k, "bernoulli": encode_rational(bernoulli_number(args.k))}
    if args.e_of_k:
        outputs["e_of_k"] = e_of_k(args.k, vandiver=args.assume_vandiver)
    if args.irregular_below is not None:
        outputs["irregular_pairs"] = [list(pair) for pair in irregular_pairs(args.irregular_below)]
    return Outcome(outputs, (VANDIVER_ASSUMPTION,) if args.assume_vandiver else ())
