"""JSON codecs for the objects cubictk reads and writes.

Exact rationals are written as strings "num/den", or "n" for integers, never as floats. Decoding checks the shape
of the JSON and raises an InputError when it does not fit.
"""

from __future__ import annotations

from collections.abc import Callable, Mapping
from fractions import Fraction
from typing import Any, TypeVar

from cubictk.errors import InputError
from cubictk.model.cyclotomic.class_group import IdealClass
from cubictk.model.group.abelian import CharacterTuple, FiniteAbelianGroup, GroupPower, format_character
from cubictk.model.group.cyclotomic_number import CycNumber
from cubictk.model.group.table import CharacterTable, CharTable, ValuationTable
from cubictk.model.riemann_roch.branch import BranchComponent, BranchData
from cubictk.model.riemann_roch.localized import DegreeTable
from cubictk.tools import lcm, rational_to_str
from cubictk.ui.report import RunReport

T = TypeVar("T")
JSON = dict[str, Any]


def _field(
    data: Mapping[str, Any], key: str, kind: type[T] | tuple[type, ...], default: Any = ...  # noqa: ANN401
) -> T:
    """Return the field of the JSON object, checking its type."""
    if not isinstance(data, Mapping):
        message = f"expected a JSON object, got {data!r}"
        raise InputError(message)
    if key not in data:
        if default is not ...:
            return default  # type: ignore[no-any-return]
        message = f"missing field '{key}'"
        raise InputError(message)
    value = data[key]
    if not isinstance(value, kind) or (isinstance(value, bool) and kind is int):
        message = f"field '{key}' has the wrong type: {value!r}"
        raise InputError(message)
    return value  # type: ignore[return-value]


def _decoding(decode: Callable[[], T], what: str) -> T:
    """Run the decoder, turning errors of the constructors into input errors."""
    try:
        return decode()
    except (TypeError, ValueError, ZeroDivisionError) as reason:
        message = f"invalid {what}: {reason}"
        raise InputError(message) from reason


def _integers(values: Any, what: str) -> tuple[int, ...]:  # noqa: ANN401
    """Return the JSON list as tuple of integers."""
    if not isinstance(values, list) or any(isinstance(value, bool) or not isinstance(value, int) for value in values):
        message = f"{what} must be a list of integers, got {values!r}"
        raise InputError(message)
    return tuple(values)


def encode_rational(value: Fraction | int) -> str:
    """Return the rational as string."""
    return rational_to_str(value)


def decode_rational(value: Any) -> Fraction:  # noqa: ANN401
    """Return the rational from a "num/den" string or a JSON integer."""
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if not isinstance(value, str):
        message = f"rationals must be strings such as \"-3/4\", got {value!r}"
        raise InputError(message)
    return _decoding(lambda: Fraction(value.strip()), "rational")


def encode_group(group: FiniteAbelianGroup) -> list[int]:
    """Return the invariant factors of the group."""
    return list(group.invariant_factors)


def decode_group(data: Any) -> FiniteAbelianGroup:  # noqa: ANN401
    """Return the group with the invariant factors."""
    return FiniteAbelianGroup(_integers(data, "invariant factors"))


def encode_character(character: CharacterTuple) -> list[list[int]]:
    """Return the exponents of the factors of the character."""
    return [list(factor.exponents) for factor in character]


def decode_character(power: GroupPower, data: Any) -> CharacterTuple:  # noqa: ANN401
    """Return the character of G^n with the exponents."""
    if not isinstance(data, list) or len(data) != power.n:
        message = f"a character of G^{power.n} needs {power.n} exponent lists, got {data!r}"
        raise InputError(message)
    return tuple(power.group.character(*_integers(exponents, "character exponents")) for exponents in data)


def encode_cyc_number(value: CycNumber) -> JSON:
    """Return the root order and the power basis coefficients of the number."""
    coefficients = [encode_rational(Fraction(c, value.denominator)) for c in value.coefficients]
    return {"root_order": value.root_order, "coefficients": coefficients}


def decode_cyc_number(data: Any) -> CycNumber:  # noqa: ANN401
    """Return the number; a bare rational is read as element of ℚ."""
    if not isinstance(data, Mapping):
        return CycNumber.from_rational(decode_rational(data))
    root_order = _field(data, "root_order", int)
    coefficients = [decode_rational(value) for value in _field(data, "coefficients", list)]
    denominator = lcm(*(value.denominator for value in coefficients))
    numerators = tuple(int(value * denominator) for value in coefficients)
    return _decoding(lambda: CycNumber(root_order, numerators, denominator), f"element of ℚ(ζ_{root_order})")


def encode_table(table: CharacterTable[Any]) -> JSON:
    """Return the table with its values in the order of the characters."""
    is_unit = isinstance(table, CharTable)
    encode_value: Callable[[Any], Any] = encode_cyc_number if is_unit else encode_rational
    return {
        "kind": "unit" if is_unit else "valuation",
        "group": encode_group(table.power.group),
        "n": table.power.n,
        "values": [
            {"character": encode_character(character), "value": encode_value(table[character])}
            for character in table.power.characters()
        ],
    }


def decode_table(data: Any) -> CharTable | ValuationTable:  # noqa: ANN401
    """Return the table of a unit, of its valuations, or of a group ring element.

    Unit tables and tables of group ring elements must be Galois-equivariant: a(φ^s) = σ_s(a(φ)).
    """
    kind = _field(data, "kind", str, "unit")
    power = decode_group(_field(data, "group", list)).power(_field(data, "n", int))
    if kind == "group_ring":
        element = {}
        for term in _field(data, "element", list):
            g = _integers(_field(term, "element", list), "group element")
            if len(g) != len(power.orders):
                message = f"elements of G^{power.n} have {len(power.orders)} exponents, got {list(g)}"
                raise InputError(message)
            coefficient = decode_rational(_field(term, "coefficient", (str, int)))
            element[power.reduce(g)] = element.get(power.reduce(g), Fraction(0)) + coefficient
        table: CharTable | ValuationTable = CharTable.from_group_ring_element(power, element)
    elif kind in {"unit", "valuation"}:
        decode_value = decode_cyc_number if kind == "unit" else decode_rational
        values: dict[CharacterTuple, Any] = {}
        for entry in _field(data, "values", list):
            character = decode_character(power, _field(entry, "character", list))
            if character in values:
                message = f"the table has two values for {format_character(character)}"
                raise InputError(message)
            values[character] = decode_value(_field(entry, "value", (str, int, dict)))
        table = CharTable(power, values) if kind == "unit" else ValuationTable(power, values)
    else:
        message = f"unknown table kind '{kind}'; expected unit, valuation or group_ring"
        raise InputError(message)
    if isinstance(table, CharTable) and (defect := table.galois_defect()) is not None:
        character, s = defect
        message = f"the table is not Galois-equivariant: a(φ^{s}) ≠ σ_{s}(a(φ)) for φ = {format_character(character)}"
        raise InputError(message)
    return table


def encode_ideal_class(ideal_class: IdealClass) -> JSON:
    """Return the invariants and the coordinates of the class."""
    return {"invariants": list(ideal_class.invariants), "coordinates": list(ideal_class.coordinates)}


def decode_ideal_class(data: Any) -> IdealClass:  # noqa: ANN401
    """Return the class."""
    invariants = _integers(_field(data, "invariants", list), "invariants")
    return IdealClass(invariants, _integers(_field(data, "coordinates", list), "coordinates"))


COMPONENT_FIELDS = ("inertia_order", "self_intersection", "euler_char", "inertia_exponent", "multiplicity")


def encode_branch_data(branch_data: BranchData) -> JSON:
    """Return the group, the components and the cross intersections."""
    components = []
    for component in branch_data.components:
        encoded: JSON = {"name": component.name} | {key: getattr(component, key) for key in COMPONENT_FIELDS}
        if component.inertia_generator is not None:
            encoded["inertia_generator"] = list(component.inertia_generator)
        if component.prime is not None:
            encoded["prime"] = component.prime
        components.append(encoded)
    return {
        "group": encode_group(branch_data.group),
        "dimension": branch_data.dimension,
        "complete_fibers": branch_data.complete_fibers,
        "components": components,
        "intersections": [[i, j, value] for (i, j), value in sorted(branch_data.cross_intersections.items())],
    }


def _decode_component(data: Any) -> BranchComponent:  # noqa: ANN401
    """Return the branch component."""
    name = _field(data, "name", str)
    fields = {key: _field(data, key, int) for key in COMPONENT_FIELDS if key in data}
    generator = data.get("inertia_generator")
    return BranchComponent(
        name,
        inertia_generator=None if generator is None else _integers(generator, "inertia generator"),
        prime=_field(data, "prime", int, None),
        **fields,
    )


def decode_branch_data(data: Any) -> BranchData:  # noqa: ANN401
    """Return the branch data; the checks of the branch data raise input errors for inconsistent data."""
    intersections = {}
    for entry in _field(data, "intersections", list, []):
        values = _integers(entry, "an intersection")
        if len(values) != 3:  # noqa: PLR2004
            message = f"intersections are triples [i, j, y_i·y_j], got {entry!r}"
            raise InputError(message)
        i, j, value = values
        intersections[i, j] = value
    return BranchData(
        decode_group(_field(data, "group", list)),
        tuple(_decode_component(component) for component in _field(data, "components", list)),
        intersections,
        _field(data, "dimension", int, 1),
        _field(data, "complete_fibers", bool, False),
    )


def decode_degree_table(data: Any, dimension: int) -> DegreeTable:  # noqa: ANN401
    """Return the degree table of a locally free sheaf on a cover of the given relative dimension."""
    entries = {}
    for entry in _field(data, "degrees", list):
        indices = _integers(_field(entry, "components", list), "component indices")
        entries[indices, _field(entry, "t", int)] = decode_rational(_field(entry, "value", (str, int)))
    return DegreeTable(dimension, _field(data, "rank", int, 1), entries)


def encode_report(report: RunReport) -> JSON:
    """Return the report; the wall time only when it was measured."""
    encoded: JSON = {
        "command": report.command,
        "argv": list(report.argv),
        "inputs": report.inputs,
        "outputs": report.outputs,
        "assumptions": list(report.assumptions),
        "exit_code": report.exit_code,
        "version": report.version,
    }
    if report.error is not None:
        encoded["error"] = report.error
    if report.wall_time is not None:
        encoded["wall_time"] = report.wall_time
    return encoded


def decode_report(data: Any) -> RunReport:  # noqa: ANN401
    """Return the report."""
    argv = _field(data, "argv", list)
    if not all(isinstance(argument, str) for argument in argv):
        message = f"the argv of a report must be a list of strings, got {argv!r}"
        raise InputError(message)
    return RunReport(
        _field(data, "command", str),
        tuple(argv),
        _field(data, "inputs", dict),
        _field(data, "outputs", dict),
        tuple(_field(data, "assumptions", list, [])),
        _field(data, "exit_code", int, 0),
        _field(data, "version", str),
        _field(data, "error", str, None),
        _field(data, "wall_time", str, None),
    )
