"""Finite idèles of K[G^n] and the map Θ_n on the module classes they present."""

from __future__ import annotations

from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from cubictk.errors import ShapeMismatchError
from cubictk.model.group.abelian import CharacterTuple, GroupPower
from cubictk.model.group.hom import GroupHom, augmentation_element
from cubictk.model.group.table import CharTable, ValuationTable

from .conditions import is_n_cubic, is_rigid


@dataclass(frozen=True)
class LocalElt:
    """Local component at a place v: an exact unit part and a valuation exponent per character."""

    unit: CharTable
    valuation: ValuationTable

    def __post_init__(self) -> None:
        """Check that both parts live on the same group power."""
        if self.unit.power != self.valuation.power:
            message = "unit part and valuations of a local element must live on the same group power"
            raise ShapeMismatchError(message)

    @classmethod
    def one(cls, power: GroupPower) -> LocalElt:
        """Return the unit local element."""
        return cls(CharTable.identity(power), ValuationTable.identity(power))

    @classmethod
    def from_unit(cls, unit: CharTable) -> LocalElt:
        """Return the local element with the unit part and valuation 0 everywhere."""
        return cls(unit, ValuationTable.identity(unit.power))

    @classmethod
    def from_valuation(cls, valuation: ValuationTable) -> LocalElt:
        """Return the local element with unit part 1 and the valuations."""
        return cls(CharTable.identity(valuation.power), valuation)

    @property
    def power(self) -> GroupPower:
        """Return the group power."""
        return self.unit.power

    def is_one(self) -> bool:
        """Return whether the local element is 1."""
        return self.unit.is_identity() and self.valuation.is_identity()

    def __mul__(self, other: LocalElt) -> LocalElt:
        """Multiply unit parts and add valuations."""
        return LocalElt(self.unit * other.unit, self.valuation * other.valuation)


@dataclass(frozen=True)
class IdeleElt:
    """Finite idèle (a_v)_v of K[G^n]; places left out carry the local element 1."""

    power: GroupPower
    local: Mapping[int, LocalElt] = field(default_factory=dict)

    def __post_init__(self) -> None:
        """Drop trivial components and check the group powers."""
        for place, element in self.local.items():
            if element.power != self.power:
                message = f"local element at {place} lives on {element.power}, not on {self.power}"
                raise ShapeMismatchError(message)
        cleaned = {place: element for place, element in sorted(self.local.items()) if not element.is_one()}
        object.__setattr__(self, "local", cleaned)

    @property
    def support(self) -> list[int]:
        """Return the places with a nontrivial component."""
        return list(self.local)

    def at(self, place: int) -> LocalElt:
        """Return the component at the place."""
        return self.local.get(place) or LocalElt.one(self.power)

    def is_unit_idele(self) -> bool:
        """Return whether every component is 1."""
        return not self.local

    def map_components(self, power: GroupPower, operation: Callable[[Any], Any]) -> IdeleElt:
        """Apply a table operation to the unit parts and the valuations, place by place; power is its target."""
        components = {
            place: LocalElt(operation(element.unit), operation(element.valuation))
            for place, element in self.local.items()
        }
        return IdeleElt(power, components)

    def push_forward(self, hom: GroupHom) -> IdeleElt:
        """Return the image under a group hom G → H, place by place."""
        if hom.source != self.power.group.power(1):
            message = f"cannot push an idèle on {self.power} forward along a hom from {hom.source}"
            raise ShapeMismatchError(message)
        return self.map_components(hom.power(self.power.n).target, lambda table: table.push_forward(hom))

    def may_equal(self, other: IdeleElt, group_order: int | None = None) -> bool:
        """Return whether the idèles pass the necessary test for presenting the same class in C_ℤ(G;n).

        At every place prime to #G the valuations must agree and the ratio of the unit parts must be n-cubic
        (rigid when n = 1). Places dividing #G are not compared.
        """
        if other.power != self.power:
            return False
        order = group_order or self.power.group.order
        for place in sorted(set(self.local) | set(other.local)):
            if order % place == 0:
                continue
            mine, theirs = self.at(place), other.at(place)
            if mine.valuation != theirs.valuation:
                return False
            ratio = mine.unit / theirs.unit
            if not (is_n_cubic(ratio).is_n_cubic if self.power.n >= 2 else is_rigid(ratio)[0]):
                return False
        return True


def theta_on_idele(idele: IdeleElt, n: int) -> IdeleElt:
    """Return the idèle (λ_(s_n)(a_v))_v presenting Θ_n of the class of the module Q((a_v)_v)."""
    if idele.power.n != 1:
        message = f"Θ_n is applied to idèles of K[G], not of K[G^{idele.power.n}]"
        raise ShapeMismatchError(message)
    s_n = augmentation_element(idele.power.group, n)
    return idele.map_components(s_n.target, lambda table: table.lambda_z(s_n))


def valuation_idele(power: GroupPower, exponents: Mapping[int, Mapping[CharacterTuple, Fraction | int]]) -> IdeleElt:
    """Return the idèle with unit parts 1 and the given valuation exponents per place and character."""
    local = {
        place: LocalElt.from_valuation(
            ValuationTable(power, {character: Fraction(value) for character, value in values.items()})
        )
        for place, values in exponents.items()
    }
    return IdeleElt(power, local)
