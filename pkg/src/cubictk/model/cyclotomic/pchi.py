"""The prime ideal P_χ attached to a character of (ℤ/p)^* of order r."""

from __future__ import annotations

from sympy.ntheory import primitive_root

from cubictk.errors import HypothesisError
from cubictk.model.group.dirichlet import DirichletCharacter

from .ideal import PrimeIdeal, split_prime
from .integer import check_prime


def character_exponent(r: int, character: DirichletCharacter) -> int:
    """Return e with χ(g) = ζ_r^e for the least primitive root g, provided χ has exact order r."""
    root_order, exponent = character.root_order, character.exponent
    if root_order % r or exponent % (root_order // r) or (exponent // (root_order // r)) % r == 0:
        message = f"the character {exponent}/{root_order} does not have order {r}"
        raise HypothesisError(message)
    return exponent // (root_order // r) % r


def residue_of_zeta(r: int, p: int, exponent: int) -> int:
    """Return c ∈ 𝔽_p with ζ_r ≡ c mod P_χ, for χ(g) = ζ_r^exponent: c = (g^((p−1)/r))^(1/exponent)."""
    g = int(primitive_root(p))
    return pow(pow(g, (p - 1) // r, p), pow(exponent, -1, r), p)


def p_chi(r: int, p: int, character: DirichletCharacter) -> PrimeIdeal:
    """Return the prime P_χ above p modulo which χ(a) ≡ a^((p−1)/r) for all a prime to p."""
    check_prime(r)
    if character.modulus != p:
        message = f"the character has modulus {character.modulus}, expected {p}"
        raise HypothesisError(message)
    if (p - 1) % r:
        message = f"p = {p} is not 1 mod r = {r}"
        raise HypothesisError(message)
    c = residue_of_zeta(r, p, character_exponent(r, character))
    return next(prime for prime in split_prime(r, p) if prime.factor == ((-c) % p, 1))
