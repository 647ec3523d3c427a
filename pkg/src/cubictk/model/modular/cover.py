"""The cover X_H → X₀(p) of modular curves: its branch data at p and the character functions T, T₁ and T₂."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from sympy import isprime, multiplicity

from cubictk.errors import HypothesisError, InputError, IntegralityError
from cubictk.model.cyclotomic.integer import check_prime
from cubictk.model.group.abelian import CharacterTuple, FiniteAbelianGroup, GCharacter
from cubictk.model.riemann_roch.branch import BranchComponent, BranchData
from cubictk.model.riemann_roch.character_function import CharFunction
from cubictk.model.stickelberger.stickelberger import reduce_rational
from cubictk.model.stickelberger.teichmuller import teichmuller

DEFAULT_PRECISION = 3

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class ModularCoverData:
    """The fiber at p of the regular model of X_H → X₀(p), where H has index r in (ℤ/p)^*/{±1}.

    The fiber of X₀(p) at p consists of the two components D₀ and D_∞, crossing in (p − 1)/12 points. The
    cover is totally ramified along D₀ and unramified along D_∞.
    """

    p: int
    r: int

    @property
    def genus(self) -> int:
        """Return the genus g₀ = (p − 13)/12 of X₀(p)."""
        return (self.p - 13) // 12

    @property
    def cover_genus(self) -> int:
        """Return the genus of X_H; the generic fiber of X_H → X₀(p) is étale of degree r."""
        return self.r * (self.genus - 1) + 1

    @property
    def crossings(self) -> int:
        """Return D₀·D_∞."""
        return (self.p - 1) // 12

    @property
    def self_intersection(self) -> int:
        """Return D₀·D₀ = D_∞·D_∞, from the fiber relation D₀·(D₀ + D_∞) = 0."""
        return -self.crossings

    @property
    def group(self) -> FiniteAbelianGroup:
        """Return G = (ℤ/p)^*/(±H) ≅ ℤ/r."""
        return FiniteAbelianGroup.cyclic(self.r)

    def branch_data(self) -> BranchData:
        """Return the branch data with residue prime p.

        The inertia group of D₀ is all of G and its cotangent character is χ₀^(−1), so that
        g(χ₀^(−a), D₀) = −{a}/r.
        """
        d0 = BranchComponent(
            "D0",
            inertia_order=self.r,
            self_intersection=self.self_intersection,
            euler_char=1,
            inertia_exponent=self.r - 1,
            prime=self.p,
        )
        d_infinity = BranchComponent("Dinf", self_intersection=self.self_intersection, euler_char=1, prime=self.p)
        return BranchData(self.group, (d0, d_infinity), {(0, 1): self.crossings}, complete_fibers=True)


def modular_cover(p: int, r: int) -> ModularCoverData:
    """Return the cover data, checking p ≡ 1 mod 24, r | (p − 1)/2 and 6 | #H; these give p ≡ 1 mod 24r."""
    check_prime(r)
    if not isprime(p):
        message = f"{p} is not a prime"
        raise InputError(message)
    if (p - 1) % 24:
        message = f"the modular cover needs p ≡ 1 mod 24, got p = {p}"
        raise HypothesisError(message)
    if (p - 1) // 2 % r or (p - 1) // (2 * r) % 6:
        message = f"r = {r} must divide (p − 1)/2 with a quotient divisible by 6, got p = {p}"
        raise HypothesisError(message)
    return ModularCoverData(p, r)


def build_modular_branch(p: int, r: int) -> BranchData:
    """Return the branch data of X_H → X₀(p) at p, with G = ℤ/r."""
    return modular_cover(p, r).branch_data()


def chi0_power(r: int, a: int) -> GCharacter:
    """Return ψ = χ₀^(−a) on ℤ/r, χ₀ the character sending the generator to ζ_r."""
    return FiniteAbelianGroup.cyclic(r).character(-a % r)


def _check_residue(r: int, a: int) -> None:
    """Raise an input error unless 0 ≤ a < r."""
    if not 0 <= a < r:
        message = f"a must satisfy 0 ≤ a < {r}, got {a}"
        raise InputError(message)


def t_equ1(p: int, r: int, a: int) -> Fraction:
    """Return T(χ₀^(−a)) = (1 − p)/12·({a}²/(2r²) − {a}/(2r)) − {a}/r, where 0 ≤ {a} < r."""
    _check_residue(r, a)
    return Fraction(1 - p, 12) * (Fraction(a**2, 2 * r**2) - Fraction(a, 2 * r)) - Fraction(a, r)


def check_away_from(r: int, exponent: Fraction) -> None:
    """Raise an integrality error unless the exponent lies in ℤ[1/r], and so in ℤ_ℓ for every ℓ ≠ r."""
    denominator = exponent.denominator
    if denominator != r ** multiplicity(r, denominator):
        message = f"the exponent {exponent} is not integral away from {r}"
        raise IntegralityError(message)


@dataclass(frozen=True)
class TCorrections:
    """T₁(χ₀^(−a)) = (1 − p)/12·ω_r(a)²/(2r²), an r-adic number, and T₂(χ₀^(−a)) = −{a}/r."""

    p: int
    r: int
    a: int
    precision: int
    r_t1: int  # r·T₁ mod r^k, an r-adic integer
    t2: Fraction
    sign: int  # The s with r·T₂ ≡ s·a mod r

    @property
    def r_squared_t1(self) -> int:
        """Return r²·T₁ mod r^k."""
        return self.r * self.r_t1 % self.r**self.precision


def t_corrections(p: int, r: int, a: int, *, precision: int = DEFAULT_PRECISION) -> TCorrections:
    """Return T₁ and T₂ at χ₀^(−a); p ≡ 1 mod 24r makes r·T₁ an r-adic integer and r·T₂ an integer."""
    _check_residue(r, a)
    modular_cover(p, r)
    modulus = r**precision
    omega = teichmuller(r, a, precision) if a else 0
    r_t1 = (1 - p) // (24 * r) * omega**2 % modulus
    t2 = Fraction(-a, r)
    sign = 1 if (r * t2 - a) % r == 0 else -1
    return TCorrections(p, r, a, precision, r_t1, t2, sign)


@dataclass(frozen=True)
class BetaTriple:
    """The exponent of p in φ(β_p) for a character φ of G³, away from r and at r."""

    away: Fraction  # In ℤ[1/r] ⊂ ℤ_ℓ for every ℓ ≠ r
    at_r: int  # In ℤ_r, mod r^k

    @property
    def integral(self) -> bool:
        """Return whether the exponent away from r lies in ℤ."""
        return self.away.denominator == 1


@dataclass(frozen=True)
class BetaIdele:
    """The idèle β with ψ(β_p) = p^(−T(ψ) + T₁(ψ) + T₂(ψ)) and ψ(β_v) = 1 for v ≠ p.

    T₁ lives in ℤ_r ⊂ ℤ̂, so away from r the exponent is −T + T₂. At r it is the r-adic integer
    −T + T₁ + T₂.
    """

    p: int
    r: int
    precision: int
    away: CharFunction
    at_r: CharFunction  # Values are integers mod r^k

    @property
    def modulus(self) -> int:
        """Return r^k."""
        return self.r**self.precision

    def exponent(self, psi: GCharacter) -> tuple[Fraction, int]:
        """Return the exponent of p in ψ(β_p) away from r and at r."""
        return self.away(psi), int(self.at_r(psi))

    def triple_exponent(self, phi: CharacterTuple) -> BetaTriple:
        """Return the exponent at Θ^D(φ) = Π (φ_i − 1) for a character φ of G³, extended additively."""
        if len(phi) != 3:  # noqa: PLR2004
            message = f"the triple product needs a character of G³, got {len(phi)} factors"
            raise InputError(message)
        return BetaTriple(self.away.on_theta(phi), int(self.at_r.on_theta(phi)) % self.modulus)


def beta_idele(p: int, r: int, *, precision: int = DEFAULT_PRECISION) -> BetaIdele:
    """Return the β idèle of the cover X_H → X₀(p), checking that each exponent is integral where it must be."""
    modular_cover(p, r)
    modulus = r**precision
    away, at_r = {}, {}
    for a in range(r):
        psi = chi0_power(r, a)
        away[psi] = -t_equ1(p, r, a) + Fraction(-a, r)
        check_away_from(r, away[psi])
        omega = teichmuller(r, a, precision + 2) if a else 0
        exponent = Fraction((p - 1) * (a**2 - omega**2), 24 * r**2) + Fraction((1 - p) * a, 24 * r)
        at_r[psi] = Fraction(reduce_rational(exponent, r, precision))
    LOGGER.info("β at p = %d has exponents in ℤ[1/%d] away from %d and in ℤ_%d mod %d", p, r, r, r, modulus)
    group = FiniteAbelianGroup.cyclic(r)
    away_function = CharFunction(group, away.__getitem__, "−T + T₂")
    return BetaIdele(p, r, precision, away_function, CharFunction(group, at_r.__getitem__, "−T + T₁ + T₂"))
