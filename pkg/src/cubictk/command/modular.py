"""Commands on the lattice of cusp forms and the class relation with Ш and the Mordell-Weil group."""

from argparse import Namespace
from pathlib import Path

from cubictk.model.cyclotomic.class_group import ClassGroup, IdealClass
from cubictk.model.modular.cover import beta_idele, chi0_power
from cubictk.model.modular.lattice import PLUS_CLASS_NUMBER_ASSUMPTION, bsd_relation, lattice_steinitz_class
from cubictk.persistence.codec import decode_ideal_class, encode_ideal_class, encode_rational
from cubictk.persistence.json_file import load_json
from cubictk.ui.report import Outcome

from .classgroup import make_class_group


def modular_class(args: Namespace) -> Outcome:
    """Compute n(χ) and the Steinitz class θ₂·[P_χ], and the exponents of the β idèle."""
    group = make_class_group(args)
    result = lattice_steinitz_class(
        args.p, args.r, group=group, exponents=args.exponents or None, precision=args.precision
    )
    beta = beta_idele(args.p, args.r, precision=args.precision)
    beta_exponents = []
    for a in range(args.r):
        away, at_r = beta.exponent(chi0_power(args.r, a))
        beta_exponents.append({"a": a, "away": encode_rational(away), "at_r": at_r})
    outputs = {
        "n_chi": result.n_chi,
        "is_free": result.is_free,
        "class": encode_ideal_class(result.ideal_class),
        "class_group": str(group),
        "characters": list(result.characters),
        "values": {str(exponent): encode_ideal_class(value) for exponent, value in sorted(result.values.items())},
        "eigen_path_agrees": result.eigen_path_agrees,
        "beta": {"modulus": beta.modulus, "exponents": beta_exponents},
    }
    return Outcome(outputs, result.assumptions)


def _load_class(path: Path | None, group: ClassGroup) -> IdealClass:
    """Load the class from the file, or return the trivial class."""
    return group.zero() if path is None else decode_ideal_class(load_json(path))


def bsd_check(args: Namespace) -> Outcome:
    """Check conj(θ₂·[P_χ]) = s(Ш) − conj(s(MW)) − s(MW) in Cl(ℤ[ζ_r, 1/2])."""
    group = make_class_group(args, invert_two=True)
    sha, mordell_weil = _load_class(args.sha, group), _load_class(args.mw, group)
    holds = bsd_relation(
        args.p, args.r, sha, mordell_weil, group=group, exponent=args.exponent, precision=args.precision
    )
    outputs = {
        "class_group": str(group),
        "sha": encode_ideal_class(sha),
        "mw": encode_ideal_class(mordell_weil),
        "holds": holds,
    }
    failure = "" if holds else "the class relation does not hold"
    return Outcome(outputs, (PLUS_CLASS_NUMBER_ASSUMPTION,), holds, failure)
