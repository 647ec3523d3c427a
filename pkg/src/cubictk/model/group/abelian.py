"""Finite abelian groups, their powers and their characters."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import gcd, prod

from cubictk.errors import InputError, ShapeMismatchError
from cubictk.tools import lcm

from .cyclotomic_number import CycNumber

GroupElement = tuple[int, ...]  # Exponent vector with respect to the generators of the invariant factors


@dataclass(frozen=True, order=True)
class FiniteAbelianGroup:
    """Finite abelian group given by its invariant factors d₁ | d₂ | ⋯ | d_k."""

    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        """Check that the invariant factors are in canonical form."""
        object.__setattr__(self, "invariant_factors", tuple(int(factor) for factor in self.invariant_factors))
        if any(factor < 2 for factor in self.invariant_factors):
            message = f"invariant factors must be at least 2: {list(self.invariant_factors)}"
            raise InputError(message)
        for smaller, larger in zip(self.invariant_factors, self.invariant_factors[1:], strict=False):
            if larger % smaller:
                message = f"invariant factors must divide each other: {list(self.invariant_factors)}"
                raise InputError(message)

    @classmethod
    def cyclic(cls, order: int) -> FiniteAbelianGroup:
        """Return the cyclic group of the given order."""
        return cls(() if order == 1 else (order,))

    @property
    def order(self) -> int:
        """Return the number of elements."""
        return prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        """Return the exponent, 1 for the trivial group."""
        return self.invariant_factors[-1] if self.invariant_factors else 1

    @property
    def rank(self) -> int:
        """Return the number of invariant factors."""
        return len(self.invariant_factors)

    def elements(self) -> Iterator[GroupElement]:
        """Return the elements as exponent vectors."""
        return product(*(range(factor) for factor in self.invariant_factors))

    def reduce(self, element: GroupElement) -> GroupElement:
        """Reduce the exponent vector modulo the invariant factors."""
        return tuple(value % factor for value, factor in zip(element, self.invariant_factors, strict=True))

    def character(self, *exponents: int) -> GCharacter:
        """Return the character with the given exponents."""
        return GCharacter(self, tuple(exponents))

    @cached_property
    def characters(self) -> tuple[GCharacter, ...]:
        """Return all characters, in lexicographic order of their exponents."""
        return tuple(GCharacter(self, exponents) for exponents in self.elements())

    @property
    def trivial_character(self) -> GCharacter:
        """Return the trivial character."""
        return GCharacter(self, (0,) * self.rank)

    def power(self, n: int) -> GroupPower:
        """Return the group G^n."""
        return GroupPower(self, n)

    def __str__(self) -> str:
        """Return the group as product of cyclic groups."""
        return " × ".join(f"ℤ/{factor}" for factor in self.invariant_factors) or "1"


@dataclass(frozen=True, order=True)
class GCharacter:
    """Character of G, sending the i-th generator to ζ_{dᵢ}^{eᵢ}."""

    group: FiniteAbelianGroup
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        """Check the exponents."""
        object.__setattr__(self, "exponents", tuple(int(exponent) for exponent in self.exponents))
        if len(self.exponents) != self.group.rank:
            message = f"character of {self.group} needs {self.group.rank} exponents, got {list(self.exponents)}"
            raise ShapeMismatchError(message)
        if any(not 0 <= e < d for e, d in zip(self.exponents, self.group.invariant_factors, strict=True)):
            message = f"character exponents {list(self.exponents)} out of range for {self.group}"
            raise InputError(message)

    def __mul__(self, other: GCharacter) -> GCharacter:
        """Return the pointwise product."""
        if other.group != self.group:
            message = f"characters of {self.group} and {other.group} cannot be multiplied"
            raise ShapeMismatchError(message)
        exponents = tuple(a + b for a, b in zip(self.exponents, other.exponents, strict=True))
        return GCharacter(self.group, self.group.reduce(exponents))

    def __pow__(self, exponent: int) -> GCharacter:
        """Return the power, which may be negative."""
        return GCharacter(self.group, self.group.reduce(tuple(exponent * e for e in self.exponents)))

    def inverse(self) -> GCharacter:
        """Return the inverse character."""
        return self**-1

    def is_trivial(self) -> bool:
        """Return whether the character is trivial."""
        return not any(self.exponents)

    @property
    def order(self) -> int:
        """Return the order of the character."""
        return lcm(*(d // gcd(e, d) for e, d in zip(self.exponents, self.group.invariant_factors, strict=True)))

    def pairing(self, element: GroupElement) -> int:
        """Return k such that χ(g) = ζ_E^k, E the group exponent."""
        exponent = self.group.exponent
        return (
            sum(
                e * x * (exponent // d)
                for e, x, d in zip(self.exponents, element, self.group.invariant_factors, strict=True)
            )
            % exponent
        )

    def value(self, element: GroupElement) -> CycNumber:
        """Return χ(g) as element of ℚ(ζ_E)."""
        return CycNumber.root_of_unity(self.group.exponent, self.pairing(element))

    def __str__(self) -> str:
        """Return the exponent vector."""
        return f"χ{list(self.exponents)}"


CharacterTuple = tuple[GCharacter, ...]  # Character φ₁ ⊗ ⋯ ⊗ φ_n of G^n


@dataclass(frozen=True, order=True)
class GroupPower:
    """The group G^n; its generators are the generators of the n copies of G, copy by copy."""

    group: FiniteAbelianGroup
    n: int

    def __post_init__(self) -> None:
        """Check the power."""
        if self.n < 0:
            message = f"group power must be non-negative, got {self.n}"
            raise InputError(message)

    @property
    def orders(self) -> tuple[int, ...]:
        """Return the orders of the generators."""
        return self.group.invariant_factors * self.n

    @property
    def order(self) -> int:
        """Return the number of elements."""
        return self.group.order**self.n

    def characters(self) -> Iterator[CharacterTuple]:
        """Return all characters of G^n."""
        return product(self.group.characters, repeat=self.n)

    @property
    def trivial_character(self) -> CharacterTuple:
        """Return the trivial character of G^n."""
        return (self.group.trivial_character,) * self.n

    def elements(self) -> Iterator[GroupElement]:
        """Return the elements as flat exponent vectors."""
        return product(*(range(order) for order in self.orders))

    def reduce(self, element: GroupElement) -> GroupElement:
        """Reduce a flat exponent vector."""
        return tuple(value % order for value, order in zip(element, self.orders, strict=True))

    def zero(self) -> GroupElement:
        """Return the identity element."""
        return (0,) * len(self.orders)

    def pairing(self, character: CharacterTuple, element: GroupElement) -> int:
        """Return k such that φ(g) = ζ_E^k, E the exponent of G."""
        self.check_character(character)
        rank = self.group.rank
        exponent = self.group.exponent
        return (
            sum(phi.pairing(element[copy * rank : (copy + 1) * rank]) for copy, phi in enumerate(character))
            % exponent
        )

    def __str__(self) -> str:
        """Return the group power as (G)^n."""
        return f"({self.group})^{self.n}"

    def check_character(self, character: CharacterTuple) -> None:
        """Check that the character is a character of this group power."""
        if len(character) != self.n or any(phi.group != self.group for phi in character):
            message = f"{format_character(character)} is not a character of ({self.group})^{self.n}"
            raise ShapeMismatchError(message)


def multiply_characters(left: CharacterTuple, right: CharacterTuple) -> CharacterTuple:
    """Return the componentwise product of two characters of G^n."""
    return tuple(a * b for a, b in zip(left, right, strict=True))


def power_character(character: CharacterTuple, exponent: int) -> CharacterTuple:
    """Return the componentwise power of a character of G^n."""
    return tuple(phi**exponent for phi in character)


def format_character(character: CharacterTuple) -> str:
    """Return a readable version of a character of G^n."""
    return "(" + ", ".join(str(phi) for phi in character) + ")"


def abelian_groups(max_order: int) -> list[FiniteAbelianGroup]:
    """Return all finite abelian groups of order at most max_order, trivial group included."""

    def extend(factors: tuple[int, ...], order: int) -> list[tuple[int, ...]]:
        """Return the invariant factor lists starting with the factors whose product stays within bounds."""
        result = [factors]
        smallest = factors[-1] if factors else 2
        for factor in range(smallest, max_order // order + 1):
            if not factors or factor % factors[-1] == 0:
                result.extend(extend((*factors, factor), order * factor))
        return result

    return [FiniteAbelianGroup(factors) for factors in extend((), 1)]
