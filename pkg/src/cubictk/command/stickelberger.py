"""Commands on Stickelberger elements, Herbrand's criterion, h⁻ and Gauss sums."""

from argparse import Namespace

from cubictk.model.cyclotomic.ideal import PrimeIdeal
from cubictk.model.modular.lattice import PLUS_CLASS_NUMBER_ASSUMPTION
from cubictk.model.stickelberger.analytic import analytic_scan
from cubictk.model.stickelberger.eigen import EigenDecomp, eigen_decompose
from cubictk.model.stickelberger.gauss import gauss_sum_check
from cubictk.model.stickelberger.herbrand import herbrand_consistent, herbrand_test
from cubictk.model.stickelberger.stickelberger import theta2_build
from cubictk.persistence.codec import encode_cyc_number, encode_ideal_class
from cubictk.ui.report import Outcome

from .classgroup import make_class_group


def theta2(args: Namespace) -> Outcome:
    """Compute the coefficients of θ₂ in ℤ_ℓ mod ℓ^k."""
    prime = args.prime or args.r
    theta = theta2_build(args.r, args.p, precision=args.precision)
    coefficients = theta.coefficients(prime, args.precision)
    outputs = {
        "prime": prime,
        "modulus": prime**args.precision,
        "coefficients": [{"a": a, "coefficient": coefficient} for a, coefficient in sorted(coefficients.items())],
    }
    return Outcome(outputs)


def herbrand(args: Namespace) -> Outcome:
    """Apply Herbrand's test and, when asked, compare it with the eigenspaces of the r-part of the class group."""
    indices = [args.k] if args.k else list(range(2, args.r - 2, 2))
    tests = {k: herbrand_test(args.r, k) for k in indices}
    outputs: dict[str, object] = {
        "tests": [{"k": k, "r_divides_b_k": divides} for k, divides in tests.items()],
        "irregular_indices": [k for k, divides in tests.items() if divides],
    }
    if not args.eigenspaces:
        return Outcome(outputs)
    group = make_class_group(args)
    if group.order % args.r:
        decomposition = EigenDecomp(args.r, 1, ())
    else:
        decomposition = eigen_decompose(group, args.r)
    consistent = herbrand_consistent(args.r, decomposition)
    outputs["class_group"] = str(group)
    outputs["eigenspaces"] = [
        {
            "j": component.j,
            "order": component.order,
            "generators": [encode_ideal_class(generator) for generator in component.generators],
        }
        for component in decomposition.components
    ]
    outputs["consistent"] = consistent
    failure = "" if consistent else "a nonzero eigenspace C_j has r ∤ B_(r−j)"
    return Outcome(outputs, (PLUS_CLASS_NUMBER_ASSUMPTION,), consistent, failure)


def hminus(args: Namespace) -> Outcome:
    """Compute h⁻ and the irregular indices analytically."""
    scan = analytic_scan(args.r, max_r=args.analytic_max_r)
    outputs = {
        "h_minus": scan.h_minus,
        "irregular_indices": list(scan.irregular_indices),
        "certified": scan.certified,
    }
    return Outcome(outputs)


def gauss(args: Namespace) -> Outcome:
    """Compute τ(ψ) and check its norm, the Jacobi sum identity and the factorization of τ(ψ)^r."""
    report = gauss_sum_check(args.p, args.r, args.exponent, degree_budget=args.degree_budget)

    def valuations(table: dict[PrimeIdeal, int]) -> list[dict[str, object]]:
        """Return the valuations ordered by prime."""
        return [{"prime": list(prime.factor), "valuation": value} for prime, value in sorted(table.items())]

    outputs = {
        "tau": encode_cyc_number(report.tau),
        "norm_identity": report.norm_identity,
        "jacobi_identity": report.jacobi_identity,
        "supported_above_p": report.supported_above_p,
        "valuations": valuations(report.valuations),
        "expected_valuations": valuations(report.expected_valuations),
        "passed": report.passed,
    }
    return Outcome(outputs, passed=report.passed, failure="" if report.passed else "a Gauss sum check failed")
