"""Rational-valued functions on the characters of G, extended linearly to virtual characters."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction

from cubictk.errors import ShapeMismatchError
from cubictk.model.group.abelian import CharacterTuple, FiniteAbelianGroup, GCharacter
from cubictk.model.group.virtual import VirtualCharacter, theta_nD


@dataclass(frozen=True)
class CharFunction:
    """A function ψ ↦ T(ψ) ∈ ℚ on the characters of G; values are cached."""

    group: FiniteAbelianGroup
    function: Callable[[GCharacter], Fraction] = field(compare=False)
    name: str = "T"
    _cache: dict[GCharacter, Fraction] = field(default_factory=dict, init=False, compare=False, repr=False)

    def __call__(self, chi: GCharacter) -> Fraction:
        """Return T(χ)."""
        if chi.group != self.group:
            message = f"{self.name} is defined on the characters of {self.group}, not of {chi.group}"
            raise ShapeMismatchError(message)
        if chi not in self._cache:
            self._cache[chi] = Fraction(self.function(chi))
        return self._cache[chi]

    def evaluate(self, virtual: VirtualCharacter) -> Fraction:
        """Return Σ m_χ·T(χ) for the virtual character Σ m_χ·χ of G."""
        if virtual.power != self.group.power(1):
            message = f"{self.name} is evaluated on virtual characters of {self.group}, not of {virtual.power}"
            raise ShapeMismatchError(message)
        return sum((multiplicity * self(character) for (character,), multiplicity in virtual.items()), Fraction(0))

    def on_theta(self, phi: CharacterTuple) -> Fraction:
        """Return T(Θ^D(φ)) = T(Π(φ_i − 1)) for the character φ = φ_1 ⊗ ⋯ ⊗ φ_n of G^n."""
        return self.evaluate(theta_nD(phi))

    def scaled(self, factor: int | Fraction) -> CharFunction:
        """Return the function factor·T."""
        return CharFunction(self.group, lambda chi: factor * self(chi), f"{factor}·{self.name}")

    def __add__(self, other: CharFunction) -> CharFunction:
        """Return the pointwise sum."""
        if other.group != self.group:
            message = f"functions on the characters of {self.group} and {other.group} cannot be added"
            raise ShapeMismatchError(message)
        return CharFunction(self.group, lambda chi: self(chi) + other(chi), f"{self.name} + {other.name}")
