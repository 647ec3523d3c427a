"""Class group commands."""

from argparse import Namespace

from cubictk.errors import CertificateMismatchError
from cubictk.model.cyclotomic.class_group import ClassGroup, class_group
from cubictk.model.cyclotomic.pchi import p_chi
from cubictk.model.group.dirichlet import DirichletCharacter
from cubictk.model.modular.lattice import PLUS_CLASS_NUMBER_ASSUMPTION
from cubictk.model.stickelberger.analytic import h_minus
from cubictk.model.stickelberger.stickelberger import annihilation_certificate
from cubictk.persistence.codec import encode_ideal_class
from cubictk.ui.report import Outcome


def make_class_group(args: Namespace, *, invert_two: bool = False) -> ClassGroup:
    """Return the class group for r with the search options of the command line."""
    return class_group(
        args.r,
        invert_two=invert_two,
        factor_base_bound=args.factor_base_bound,
        budget=args.budget,
        max_r=args.max_r,
    )


def classgroup(args: Namespace) -> Outcome:
    """Compute the class group and optionally certify that θ₁ annihilates its generators."""
    group = make_class_group(args, invert_two=args.invert_two)
    outputs = {
        "class_group": str(group),
        "invariants": list(group.invariants),
        "order": group.order,
        "h_minus": h_minus(args.r),
    }
    if args.annihilation:
        certificates = []
        for generator in group.generators():
            certificate = annihilation_certificate(generator, group)
            if certificate is None or not certificate.verify(group.factor_base):
                message = f"θ₁ does not annihilate the class {generator} of {group}"
                raise CertificateMismatchError(message)
            certificates.append(
                {
                    "class": encode_ideal_class(generator),
                    "elements": [list(element.coeffs) for element in certificate.elements],
                    "exponents": list(certificate.exponents),
                }
            )
        outputs["annihilation"] = certificates
    return Outcome(outputs, (PLUS_CLASS_NUMBER_ASSUMPTION,))


def pchi(args: Namespace) -> Outcome:
    """Find P_χ and optionally its class."""
    prime = p_chi(args.r, args.p, DirichletCharacter(args.p, args.r, args.exponent))
    outputs: dict[str, object] = {
        "p": prime.p,
        "factor": list(prime.factor),
        "residue_degree": prime.residue_degree,
        "norm": prime.norm,
    }
    if not args.with_class:
        return Outcome(outputs)
    group = make_class_group(args)
    outputs["class"] = encode_ideal_class(group.class_of(prime))
    outputs["class_group"] = str(group)
    return Outcome(outputs, (PLUS_CLASS_NUMBER_ASSUMPTION,))
