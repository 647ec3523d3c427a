"""Localized Riemann-Roch: the character functions T_π and T_(π,𝒢) built from branch data."""

from __future__ import annotations

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import factorial, prod

from cubictk.errors import HypothesisError, IncompleteDataError, InputError
from cubictk.model.group.abelian import GCharacter

from .branch import BranchData
from .character_function import CharFunction

DegreeKey = tuple[tuple[int, ...], int]  # (sorted component indices, t)

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class DegreeTable:
    """The degrees deg(ch^t(𝒢) ∩ [y_(j_1)] ∩ ⋯ ∩ [y_(j_l)] ∩ Td_(t+l)(h)) for 1 ≤ l ≤ d + 1, 0 ≤ t ≤ d + 1 − l.

    Entries are keyed by the sorted tuple of component indices and t, because intersecting cycles commutes.
    """

    dimension: int
    rank: int
    entries: Mapping[DegreeKey, Fraction] = field(compare=False)

    def __post_init__(self) -> None:
        """Normalize the keys and check their ranges."""
        entries = {}
        for (indices, t), value in self.entries.items():
            if not 1 <= len(indices) <= self.dimension + 1 or not 0 <= t <= self.dimension + 1 - len(indices):
                message = f"degree table entry {list(indices)}, t = {t} is out of range for d = {self.dimension}"
                raise InputError(message)
            entries[tuple(sorted(indices)), t] = Fraction(value)
        object.__setattr__(self, "entries", entries)

    def degree(self, indices: tuple[int, ...], t: int) -> Fraction:
        """Return the degree for the components and t."""
        key = (tuple(sorted(indices)), t)
        if key not in self.entries:
            message = f"the degree table has no entry for components {list(key[0])} and t = {t}"
            raise IncompleteDataError(message)
        return self.entries[key]


def surface_degree_table(
    branch_data: BranchData, rank: int = 1, c1_degrees: Mapping[str, int] | None = None
) -> DegreeTable:
    """Return the degree table of a locally free 𝒢 on a relative curve from the intersection numbers.

    With Td_1 = −c_1(ω)/2 and adjunction, deg([y] ∩ Td_1) = (y·y + 2χ(y, 𝒪_y))/2. The degrees deg(c_1(𝒢) ∩ [y])
    default to 0.
    """
    if branch_data.dimension != 1:
        message = f"surface degree tables need relative dimension 1, got {branch_data.dimension}"
        raise HypothesisError(message)
    c1_degrees = c1_degrees or {}
    entries: dict[DegreeKey, Fraction] = {}
    for i, component in enumerate(branch_data.components):
        todd = Fraction(component.self_intersection + 2 * component.euler_char, 2)
        entries[(i,), 0] = rank * todd
        entries[(i,), 1] = Fraction(c1_degrees.get(component.name, 0))
        for j in range(i, len(branch_data.components)):
            entries[(i, j), 0] = Fraction(rank * branch_data.intersection(i, j))
    return DegreeTable(1, rank, entries)


def t_pi_surface(branch_data: BranchData, chi: GCharacter, prime: int | None = None) -> Fraction:
    """Return T_π(ψ) for 𝒢 = 𝒪_Y on a relative curve.

    T_π(ψ) = Σ_(y_1, y_2) g(ψ, y_1)·g(ψ, y_2)·(y_1·y_2)/2 + Σ_y g(ψ, y)·(y·y + 2χ(y, 𝒪_y))/2, the first sum over
    ordered pairs, the diagonal included. With a prime, only the components above it count.
    """
    if branch_data.dimension != 1:
        message = f"the surface formula needs relative dimension 1, got {branch_data.dimension}"
        raise HypothesisError(message)
    ramified = branch_data.ramified(chi, prime)
    quadratic = sum(
        (g_i * g_j * branch_data.intersection(i, j) for (i, g_i), (j, g_j) in product(ramified, repeat=2)), Fraction(0)
    )
    linear = sum(
        (
            g * (branch_data.components[i].self_intersection + 2 * branch_data.components[i].euler_char)
            for i, g in ramified
        ),
        Fraction(0),
    )
    return (quadratic + linear) / 2


def t_pi_general(branch_data: BranchData, table: DegreeTable, chi: GCharacter, prime: int | None = None) -> Fraction:
    """Return T_(π,𝒢)(ψ) = Σ_l Σ_(y_1, …, y_l) Π_j g(ψ, y_j)/l! · Σ_t deg(ch^t(𝒢) ∩ ∩_j [y_j] ∩ Td_(t+l)(h))."""
    d = branch_data.dimension
    if table.dimension != d:
        message = f"the degree table is for d = {table.dimension}, the branch data for d = {d}"
        raise InputError(message)
    ramified = branch_data.ramified(chi, prime)
    total = Fraction(0)
    for length in range(1, d + 2):
        for terms in product(ramified, repeat=length):
            indices = tuple(i for i, _ in terms)
            degree = sum((table.degree(indices, t) for t in range(d + 2 - length)), Fraction(0))
            total += prod((g for _, g in terms), start=Fraction(1)) * degree / factorial(length)
    return total


def t_pi_function(branch_data: BranchData, table: DegreeTable | None = None, prime: int | None = None) -> CharFunction:
    """Return T_π for 𝒢 = 𝒪_Y on a relative curve, or T_(π,𝒢) when the degree table of 𝒢 is given.

    With a prime, the function is T_(v,𝒢) of the components above it.
    """
    if table is None:
        return CharFunction(branch_data.group, lambda chi: t_pi_surface(branch_data, chi, prime), "T_π")
    return CharFunction(branch_data.group, lambda chi: t_pi_general(branch_data, table, chi, prime), "T_(π,𝒢)")


@dataclass(frozen=True)
class IntegralityReport:
    """The values T(ψ) for all characters ψ and the ψ where (#G)^(d+1)·T(ψ) is not an integer."""

    scale: int
    values: dict[GCharacter, Fraction]
    violations: tuple[GCharacter, ...]

    @property
    def passed(self) -> bool:
        """Return whether all scaled values are integers."""
        return not self.violations


def integrality_check(
    branch_data: BranchData, table: DegreeTable | None = None, prime: int | None = None
) -> IntegralityReport:
    """Check that (#G)^(d+1)·T(ψ) ∈ ℤ for every character ψ of G; with a prime, for T_v of the components above it."""
    function = t_pi_function(branch_data, table, prime)
    scale = branch_data.group.order ** (branch_data.dimension + 1)
    values = {chi: function(chi) for chi in branch_data.group.characters}
    violations = tuple(chi for chi, value in values.items() if (scale * value).denominator != 1)
    if violations:
        LOGGER.warning("%d·T is not integral at %d characters of %s", scale, len(violations), branch_data.group)
    return IntegralityReport(scale, values, violations)
