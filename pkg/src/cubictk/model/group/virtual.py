"""Virtual characters: formal integer combinations of characters."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator, Mapping

from cubictk.errors import ShapeMismatchError

from .abelian import CharacterTuple, GroupPower, format_character, multiply_characters


class VirtualCharacter:
    """Formal ℤ-combination of characters of G^n, without zero terms."""

    def __init__(self, power: GroupPower, terms: Mapping[CharacterTuple, int] | None = None) -> None:
        self.power = power
        self._terms: dict[CharacterTuple, int] = {}
        for character, multiplicity in (terms or {}).items():
            power.check_character(character)
            if multiplicity:
                self._terms[character] = multiplicity

    @classmethod
    def from_terms(cls, power: GroupPower, terms: Iterable[tuple[CharacterTuple, int]]) -> VirtualCharacter:
        """Collect the terms, adding up the multiplicities of equal characters."""
        counter: Counter[CharacterTuple] = Counter()
        for character, multiplicity in terms:
            counter[character] += multiplicity
        return cls(power, counter)

    @classmethod
    def character(cls, power: GroupPower, character: CharacterTuple, multiplicity: int = 1) -> VirtualCharacter:
        """Return a single character with multiplicity."""
        return cls(power, {character: multiplicity})

    @classmethod
    def one(cls, power: GroupPower) -> VirtualCharacter:
        """Return the trivial character with multiplicity one."""
        return cls.character(power, power.trivial_character)

    def items(self) -> Iterator[tuple[CharacterTuple, int]]:
        """Return the characters and their multiplicities in a deterministic order."""
        return iter(sorted(self._terms.items()))

    def multiplicity(self, character: CharacterTuple) -> int:
        """Return the multiplicity of the character."""
        return self._terms.get(character, 0)

    def is_zero(self) -> bool:
        """Return whether this is the zero virtual character."""
        return not self._terms

    def degree(self) -> int:
        """Return the sum of the multiplicities, the virtual dimension."""
        return sum(self._terms.values())

    def _check_power(self, other: VirtualCharacter) -> None:
        """Check that both virtual characters live on the same group power."""
        if other.power != self.power:
            message = f"virtual characters of {self.power} and {other.power} cannot be combined"
            raise ShapeMismatchError(message)

    def __add__(self, other: VirtualCharacter) -> VirtualCharacter:
        """Add the virtual characters."""
        self._check_power(other)
        return VirtualCharacter.from_terms(self.power, [*self._terms.items(), *other._terms.items()])

    def __neg__(self) -> VirtualCharacter:
        """Negate the virtual character."""
        return VirtualCharacter(self.power, {character: -value for character, value in self._terms.items()})

    def __sub__(self, other: VirtualCharacter) -> VirtualCharacter:
        """Subtract the virtual characters."""
        return self + (-other)

    def __mul__(self, other: VirtualCharacter | int) -> VirtualCharacter:
        """Multiply by an integer, or multiply two virtual characters as elements of the character ring."""
        if isinstance(other, int):
            return VirtualCharacter(self.power, {character: other * value for character, value in self._terms.items()})
        self._check_power(other)
        return VirtualCharacter.from_terms(
            self.power,
            (
                (multiply_characters(left, right), left_value * right_value)
                for left, left_value in self._terms.items()
                for right, right_value in other._terms.items()
            ),
        )

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        """Return whether the virtual characters are equal."""
        if not isinstance(other, VirtualCharacter):
            return NotImplemented
        return self.power == other.power and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        """Return the virtual character as signed sum."""
        terms = [f"{value:+d}·{format_character(character)}" for character, value in self.items()]
        return " ".join(terms) or "0"


def theta_nD(phi_tuple: CharacterTuple) -> VirtualCharacter:
    """Return Π(φᵢ − 1), expanded, as a virtual character of G."""
    if not phi_tuple:
        message = "Θ^D needs at least one character"
        raise ShapeMismatchError(message)
    group = phi_tuple[0].group
    power = group.power(1)
    result = VirtualCharacter.one(power)
    for phi in phi_tuple:
        result *= VirtualCharacter.character(power, (phi,)) - VirtualCharacter.one(power)
    return result
