"""Dirichlet characters of prime modulus."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from sympy.ntheory import isprime, primitive_root

from cubictk.errors import InputError

from .cyclotomic_number import CycNumber


@cache
def discrete_logarithms(modulus: int) -> dict[int, int]:
    """Return a ↦ i with a = g^i mod p, for the least primitive root g."""
    generator = int(primitive_root(modulus))
    table, value = {}, 1
    for index in range(modulus - 1):
        table[value] = index
        value = value * generator % modulus
    return table


@dataclass(frozen=True)
class DirichletCharacter:
    """Character of (ℤ/p)^* sending the least primitive root g to ζ_m^j; modulus 1 gives the trivial character."""

    modulus: int
    root_order: int = 1
    exponent: int = 0

    def __post_init__(self) -> None:
        """Check the modulus and the order."""
        if self.modulus != 1 and not isprime(self.modulus):
            message = f"Dirichlet characters are supported for prime moduli only, got {self.modulus}"
            raise InputError(message)
        if self.modulus > 1 and (self.modulus - 1) % self.root_order:
            message = f"a character mod {self.modulus} cannot have values of order {self.root_order}"
            raise InputError(message)
        object.__setattr__(self, "exponent", self.exponent % self.root_order)

    @property
    def conductor(self) -> int:
        """Return the conductor; nontrivial characters of prime modulus are primitive."""
        return 1 if self.is_trivial() else self.modulus

    def is_trivial(self) -> bool:
        """Return whether the character is trivial."""
        return self.modulus == 1 or self.exponent == 0

    def is_odd(self) -> bool:
        """Return whether χ(−1) = −1."""
        return self.value_exponent(-1) * 2 == self.root_order

    def value_exponent(self, a: int) -> int:
        """Return k with χ(a) = ζ_m^k; a must be prime to the modulus."""
        if self.modulus == 1:
            return 0
        residue = a % self.modulus
        if residue == 0:
            message = f"{a} is not a unit mod {self.modulus}"
            raise InputError(message)
        return discrete_logarithms(self.modulus)[residue] * self.exponent % self.root_order

    def value(self, a: int) -> CycNumber:
        """Return χ(a), which is 0 when a is not prime to the modulus."""
        if self.modulus > 1 and a % self.modulus == 0:
            return CycNumber.from_rational(0, self.root_order)
        return CycNumber.root_of_unity(self.root_order, self.value_exponent(a))


def teichmuller_powers(p: int) -> list[DirichletCharacter]:
    """Return the characters ω^j, j = 0, …, p − 2, with values in ℚ(ζ_(p−1))."""
    return [DirichletCharacter(p, p - 1, j) for j in range(p - 1)]
