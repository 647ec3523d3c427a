"""The rigid, symmetric and cocycle conditions on elements of K[G^n]^*."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import Any

from cubictk.errors import InputError
from cubictk.model.group.abelian import CharacterTuple
from cubictk.model.group.hom import (
    SigmaElt,
    adjacent_transpositions,
    augmentation_element,
    cocycle_element,
    rigidity_element,
    symmetry_element,
)
from cubictk.model.group.table import CharacterTable

Table = CharacterTable[Any]
Check = tuple[bool, CharacterTuple | None]  # Outcome and, on failure, a character where the condition fails


@dataclass(frozen=True)
class CubicVerdict:
    """Outcome of the three cubic conditions with the failing characters."""

    rigid: bool
    symmetric: bool
    cocycle: bool
    witnesses: dict[str, CharacterTuple] = field(default_factory=dict)

    @property
    def is_n_cubic(self) -> bool:
        """Return whether all three conditions hold."""
        return self.rigid and self.symmetric and self.cocycle


def _first_defect(table: Table, elements: Iterable[SigmaElt]) -> CharacterTuple | None:
    """Return the first character where λ_z(a) is not neutral, over the given z."""
    for z in elements:
        for character in table.defects(z):
            return character
    return None


def _check(table: Table, elements: Iterable[SigmaElt]) -> Check:
    """Return whether λ_z(a) is neutral for all z and a witness otherwise."""
    witness = _first_defect(table, elements)
    return witness is None, witness


def is_rigid(table: Table) -> Check:
    """Return whether a(1, …, 1) is neutral; the witness is the trivial character."""
    rigid, _ = _check(table, [rigidity_element(table.power.group, table.power.n)])
    return rigid, None if rigid else table.power.trivial_character


def is_symmetric(table: Table) -> Check:
    """Return whether a(φ_σ(1), …, φ_σ(n)) = a(φ₁, …, φ_n) for all permutations σ.

    The adjacent transpositions generate the symmetric group, so only those are checked.
    """
    group, n = table.power.group, table.power.n
    return _check(table, (symmetry_element(group, permutation) for permutation in adjacent_transpositions(n)))


def is_cocycle(table: Table) -> Check:
    """Return whether the four pull-backs of the cocycle condition multiply to 1 at every character of G^(n+1)."""
    return _check(table, [cocycle_element(table.power.group, table.power.n)])


def is_n_cubic(table: Table) -> CubicVerdict:
    """Check the three conditions and collect the witnesses of the failing ones."""
    checks = {"rigid": is_rigid(table), "symmetric": is_symmetric(table), "cocycle": is_cocycle(table)}
    witnesses = {name: witness for name, (_, witness) in checks.items() if witness is not None}
    return CubicVerdict(checks["rigid"][0], checks["symmetric"][0], checks["cocycle"][0], witnesses)


def check_annihilates_augmentation(z: SigmaElt) -> None:
    """Check that z·s_n = 0, which every z used to define V-cubic elements must satisfy."""
    s_n = augmentation_element(z.source.group, z.source.n)
    if not (z * s_n).is_zero():
        message = f"z in Σ({z.source}, {z.target}) does not annihilate s_{z.source.n}, so it is no V-cubic condition"
        raise InputError(message)


def is_V_cubic(table: Table, V: Iterable[SigmaElt]) -> bool:
    """Return whether λ_z(a) is neutral for every z in V."""
    elements = list(V)
    for z in elements:
        check_annihilates_augmentation(z)
    return _first_defect(table, elements) is None


def standard_conditions(table: Table) -> list[SigmaElt]:
    """Return the elements of Σ whose λ_z define n-cubic elements: e, the z_σ and the cocycle element."""
    group, n = table.power.group, table.power.n
    symmetries = [symmetry_element(group, permutation) for permutation in adjacent_transpositions(n)]
    return [rigidity_element(group, n), *symmetries, cocycle_element(group, n)]
