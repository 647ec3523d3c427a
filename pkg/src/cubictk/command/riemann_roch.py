"""Localized Riemann-Roch commands."""

from argparse import Namespace
from dataclasses import replace

from cubictk.model.cubic.conditions import is_n_cubic
from cubictk.model.group.table import ValuationTable
from cubictk.model.riemann_roch.branch import BranchData
from cubictk.model.riemann_roch.idele import main_theorem_idele
from cubictk.model.riemann_roch.identities import telescope_residual
from cubictk.model.riemann_roch.localized import DegreeTable, integrality_check
from cubictk.persistence.codec import decode_branch_data, decode_degree_table, encode_character, encode_rational
from cubictk.persistence.json_file import load_json
from cubictk.ui.report import Outcome


def _load(args: Namespace) -> tuple[BranchData, DegreeTable | None]:
    """Load the branch data and, if given, the degree table."""
    branch_data = decode_branch_data(load_json(args.branch_data))
    if args.complete_fibers and not branch_data.complete_fibers:
        branch_data = replace(branch_data, complete_fibers=True)
    if args.degrees is None:
        return branch_data, None
    return branch_data, decode_degree_table(load_json(args.degrees), branch_data.dimension)


def tpi(args: Namespace) -> Outcome:
    """Evaluate T on every character of G and check that (#G)^(d+1)·T is integral."""
    branch_data, table = _load(args)
    report = integrality_check(branch_data, table, args.prime)
    outputs = {
        "scale": report.scale,
        "values": [
            {"character": list(chi.exponents), "value": encode_rational(value)}
            for chi, value in report.values.items()
        ],
        "violations": [list(chi.exponents) for chi in report.violations],
        "integral": report.passed,
    }
    failure = "" if report.passed else f"{report.scale}·T is not integral"
    return Outcome(outputs, passed=report.passed, failure=failure)


def mainthm_idele(args: Namespace) -> Outcome:
    """Compute the idèle of the Euler characteristic and check that it is (d + 2)-cubic and Frobenius-invariant."""
    branch_data, table = _load(args)
    idele = main_theorem_idele(
        branch_data, table, squared=args.squared, euler_characteristic=args.euler_characteristic
    )
    places = []
    for place in idele.places:
        exponents = idele.exponents[place]
        places.append(
            {
                "prime": place,
                "exponents": [
                    {"character": encode_character(phi), "exponent": encode_rational(exponent)}
                    for phi, exponent in exponents.items()
                    if exponent
                ],
                "n_cubic": is_n_cubic(ValuationTable(idele.power, exponents)).is_n_cubic,
            }
        )
    defect = idele.orbit_defect()
    outputs = {
        "n": idele.power.n,
        "factor": idele.factor,
        "places": places,
        "frobenius_invariant": defect is None,
    }
    passed = defect is None and all(place["n_cubic"] for place in places)
    failure = "" if passed else "the idèle is not cubic or not Frobenius-invariant"
    return Outcome(outputs, passed=passed, failure=failure)


def telescope(args: Namespace) -> Outcome:
    """Expand the alternating sum of powers; it must vanish below degree n."""
    residual = telescope_residual(args.n, args.q)
    vanishes = residual == 0
    outputs = {"n": args.n, "q": args.q, "residual": str(residual), "vanishes": vanishes}
    passed = vanishes or args.q >= args.n
    return Outcome(outputs, passed=passed, failure="" if passed else "the residual is nonzero although q < n")
