"""Character-value tables of group-ring elements and of their valuations.

An element a of K[G^n]^* is determined by the map φ ↦ φ(a) on characters of G^n. A CharTable stores that map
with exact cyclotomic values and multiplies pointwise; a ValuationTable stores the valuations of such values at a
place and adds pointwise. Both share the maps λ_z and the checks built on them.
"""

from __future__ import annotations

import random
from abc import ABC, abstractmethod
from collections.abc import Iterable, Iterator, Mapping
from fractions import Fraction
from math import gcd
from typing import Generic, TypeVar

from cubictk.errors import IncompleteDataError, ShapeMismatchError
from cubictk.tools import lcm

from .abelian import (
    CharacterTuple,
    FiniteAbelianGroup,
    GroupElement,
    GroupPower,
    format_character,
    power_character,
)
from .cyclotomic_number import CycNumber, Scalar
from .hom import GroupHom, SigmaElt
from .virtual import VirtualCharacter

V = TypeVar("V")
TableT = TypeVar("TableT", bound="CharacterTable")  # type: ignore[type-arg]


class CharacterTable(ABC, Generic[V]):
    """Total map from the characters of G^n to the values of an abelian group."""

    def __init__(self, power: GroupPower, values: Mapping[CharacterTuple, V]) -> None:
        self.power = power
        self._values = dict(values)
        for character in self._values:
            power.check_character(character)
        if len(self._values) != power.order:
            missing = next(character for character in power.characters() if character not in self._values)
            message = f"table on ({power.group})^{power.n} has no value for {format_character(missing)}"
            raise IncompleteDataError(message)

    @staticmethod
    @abstractmethod
    def identity_value() -> V:
        """Return the neutral value of the group law."""

    @staticmethod
    @abstractmethod
    def combine(terms: Iterable[tuple[V, int]]) -> V:
        """Return the group-law combination Π vᵢ^mᵢ (written additively for valuations)."""

    @staticmethod
    @abstractmethod
    def balanced(terms: Iterable[tuple[V, int]]) -> bool:
        """Return whether combine(terms) is the neutral value."""

    @classmethod
    def constant(cls: type[TableT], power: GroupPower, value: V) -> TableT:
        """Return the table with the same value everywhere."""
        return cls(power, dict.fromkeys(power.characters(), value))

    @classmethod
    def identity(cls: type[TableT], power: GroupPower) -> TableT:
        """Return the neutral table."""
        return cls.constant(power, cls.identity_value())

    def __getitem__(self, character: CharacterTuple) -> V:
        """Return the value at the character."""
        return self._values[character]

    def items(self) -> Iterator[tuple[CharacterTuple, V]]:
        """Return the characters and values in a deterministic order."""
        return iter(sorted(self._values.items(), key=lambda item: item[0]))

    def evaluate(self, virtual: VirtualCharacter) -> V:
        """Extend the table multiplicatively to a virtual character."""
        return self.combine((self[character], multiplicity) for character, multiplicity in virtual.items())

    def __mul__(self: TableT, other: TableT) -> TableT:
        """Return the pointwise product (sum for valuations)."""
        self._check_power(other)
        return type(self)(
            self.power, {chi: self.combine([(value, 1), (other[chi], 1)]) for chi, value in self._values.items()}
        )

    def inverse(self: TableT) -> TableT:
        """Return the pointwise inverse."""
        return type(self)(self.power, {chi: self.combine([(value, -1)]) for chi, value in self._values.items()})

    def __truediv__(self: TableT, other: TableT) -> TableT:
        """Return the pointwise quotient."""
        return self * other.inverse()

    def is_identity(self) -> bool:
        """Return whether every value is neutral."""
        return all(self.balanced([(value, 1)]) for value in self._values.values())

    def lambda_z(self: TableT, z: SigmaElt) -> TableT:
        """Return λ_z(a): the table on G^s with value Π_𝓘 a(ψ ∘ 𝓘)^z(𝓘) at ψ."""
        self._check_source(z)
        return type(self)(
            z.target,
            {
                psi: self.combine((self[hom.pull_back(psi)], value) for hom, value in z.terms)
                for psi in z.target.characters()
            },
        )

    def defects(self, z: SigmaElt) -> Iterator[CharacterTuple]:
        """Return the characters ψ of G^s where λ_z(a) is not neutral."""
        self._check_source(z)
        for psi in z.target.characters():
            if not self.balanced((self[hom.pull_back(psi)], value) for hom, value in z.terms):
                yield psi

    def push_forward(self: TableT, hom: GroupHom) -> TableT:
        """Return the table on H^n of the image of a under a hom G → H, with value a(χ ∘ hom^n) at χ."""
        if hom.source.n != 1 or hom.target.n != 1 or hom.source.group != self.power.group:
            message = f"cannot push a table on ({self.power.group})^{self.power.n} forward along this hom"
            raise ShapeMismatchError(message)
        power_hom = hom.power(self.power.n)
        return type(self)(
            power_hom.target, {chi: self[power_hom.pull_back(chi)] for chi in power_hom.target.characters()}
        )

    def _check_power(self, other: CharacterTable[V]) -> None:
        """Check that the tables live on the same group power."""
        if other.power != self.power:
            message = "tables on different group powers cannot be combined"
            raise ShapeMismatchError(message)

    def _check_source(self, z: SigmaElt) -> None:
        """Check that z starts at this table's group power."""
        if z.source != self.power:
            message = f"λ_z needs z in Σ starting at ({self.power.group})^{self.power.n}"
            raise ShapeMismatchError(message)

    def __eq__(self, other: object) -> bool:
        """Return whether the tables are equal."""
        if not isinstance(other, CharacterTable):
            return NotImplemented
        return type(self) is type(other) and self.power == other.power and self._values == other._values

    __hash__ = None  # type: ignore[assignment]


class CharTable(CharacterTable[CycNumber]):
    """Character-value table of a unit of K[G^n], values exact in ℚ(ζ_m)."""

    @staticmethod
    def identity_value() -> CycNumber:
        """Return 1."""
        return CycNumber.from_rational(1)

    @staticmethod
    def combine(terms: Iterable[tuple[CycNumber, int]]) -> CycNumber:
        """Return Π vᵢ^mᵢ, inverting only once."""
        numerator, denominator = _split_product(terms)
        return numerator if denominator == 1 else numerator / denominator

    @staticmethod
    def balanced(terms: Iterable[tuple[CycNumber, int]]) -> bool:
        """Return whether Π vᵢ^mᵢ = 1, without inverting."""
        numerator, denominator = _split_product(terms)
        return numerator == denominator

    @classmethod
    def from_group_ring_element(
        cls, power: GroupPower, element: Mapping[GroupElement, Scalar | CycNumber]
    ) -> CharTable:
        """Return the table φ ↦ Σ_g α(g)φ(g) of α ∈ K[G^n]."""
        exponent = power.group.exponent
        values = {}
        for character in power.characters():
            cyclic: list[Fraction] = [Fraction(0)] * exponent
            extra = CycNumber.from_rational(0, exponent)
            for g, coefficient in element.items():
                k = power.pairing(character, power.reduce(g))
                if isinstance(coefficient, CycNumber):
                    extra += coefficient * CycNumber.root_of_unity(exponent, k)
                else:
                    cyclic[k] += Fraction(coefficient)
            values[character] = CycNumber.from_cyclic(exponent, cyclic) + extra
        return cls(power, values)

    @property
    def root_order(self) -> int:
        """Return the m such that all values and characters live in ℚ(ζ_m)."""
        return lcm(self.power.group.exponent, *(value.root_order for value in self._values.values()))

    def galois_defect(self) -> tuple[CharacterTuple, int] | None:
        """Return a character and an s with a(φ^s) ≠ a(φ)^σ_s, or None if the table is Galois-equivariant."""
        m = self.root_order
        for s in range(2, m):
            if gcd(s, m) != 1:
                continue
            for character, value in self._values.items():
                if self[power_character(character, s)] != value.lift(m).galois(s):
                    return character, s
        return None

    def has_zero(self) -> bool:
        """Return whether some value vanishes, in which case the table is not a unit."""
        return any(value.is_zero() for value in self._values.values())


class ValuationTable(CharacterTable[Fraction]):
    """Table of rational valuation exponents per character; the group law is addition."""

    @staticmethod
    def identity_value() -> Fraction:
        """Return 0."""
        return Fraction(0)

    @staticmethod
    def combine(terms: Iterable[tuple[Fraction, int]]) -> Fraction:
        """Return Σ mᵢvᵢ."""
        return sum((multiplicity * value for value, multiplicity in terms), Fraction(0))

    @staticmethod
    def balanced(terms: Iterable[tuple[Fraction, int]]) -> bool:
        """Return whether Σ mᵢvᵢ = 0."""
        return ValuationTable.combine(terms) == 0

    def scaled(self, factor: Scalar) -> ValuationTable:
        """Return the table with every exponent multiplied by the factor."""
        return ValuationTable(self.power, {chi: factor * value for chi, value in self._values.items()})

    def orbit_defect(self) -> tuple[CharacterTuple, int] | None:
        """Return a character and an s with t(φ^s) ≠ t(φ), or None if the table is constant on Galois orbits."""
        m = self.power.group.exponent
        for s in range(2, m):
            if gcd(s, m) == 1:
                for character, value in self._values.items():
                    if self[power_character(character, s)] != value:
                        return character, s
        return None


def _split_product(terms: Iterable[tuple[CycNumber, int]]) -> tuple[CycNumber, CycNumber]:
    """Return the products of the terms with positive and with negative exponents."""
    numerator = denominator = CycNumber.from_rational(1)
    for value, multiplicity in terms:
        if multiplicity > 0:
            numerator *= value**multiplicity
        elif multiplicity < 0:
            denominator *= value**-multiplicity
    return numerator, denominator


def random_unit(group: FiniteAbelianGroup, generator: random.Random, size: int = 3) -> CharTable:
    """Return the table of a random α ∈ ℚ[G] with coefficients in [−size, size] and no vanishing character value."""
    power = group.power(1)
    while True:
        element = {g: generator.randint(-size, size) for g in power.elements()}
        table = CharTable.from_group_ring_element(power, element)
        if not table.has_zero():
            return table
