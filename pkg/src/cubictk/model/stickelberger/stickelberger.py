"""Stickelberger elements θ₁ and θ₂ and their action on cyclotomic class groups."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from sympy import factorint, isprime

from cubictk.errors import HypothesisError, InputError, IntegralityError, PrecisionError
from cubictk.model.cyclotomic.class_group import ClassGroup, IdealClass, PrincipalityCertificate
from cubictk.model.cyclotomic.integer import check_prime
from cubictk.model.cyclotomic.relations import vector_sum

from .teichmuller import teichmuller

StickelbergerKind = Literal["theta1", "theta2"]

LOGGER = logging.getLogger(__name__)


def reduce_rational(value: Fraction, prime: int, precision: int) -> int:
    """Return the ℓ-adic integer value mod ℓ^k; raise an integrality error if ℓ divides the denominator."""
    if value.denominator % prime == 0:
        message = f"{value} is not integral at {prime}"
        raise IntegralityError(message)
    modulus = prime**precision
    return value.numerator * pow(value.denominator, -1, modulus) % modulus


@dataclass(frozen=True)
class StickelbergerElt:
    """Σ_a c(a)·σ_a^(−1), with the coefficients c(a) given per prime ℓ as elements of ℤ_ℓ."""

    r: int
    kind: StickelbergerKind
    p: int = 0  # Only θ₂ depends on p

    def coefficient(self, a: int, prime: int, precision: int) -> int:
        """Return the coefficient of σ_a^(−1) in ℤ_ℓ mod ℓ^k.

        At ℓ = r the Teichmüller correction of θ₂ is computed two digits beyond the requested precision, because
        the division by r² consumes them.
        """
        if a % self.r == 0:
            message = f"{a} is not a unit mod {self.r}"
            raise InputError(message)
        residue = a % self.r
        if self.kind == "theta1":
            return residue % prime**precision
        square = residue**2
        if prime == self.r:
            omega = teichmuller(self.r, a, precision + 2)
            square -= omega**2
        return reduce_rational(Fraction((self.p - 1) * square, 24 * self.r**2), prime, precision)

    def coefficients(self, prime: int, precision: int) -> dict[int, int]:
        """Return a ↦ coefficient of σ_a^(−1) for a = 1, …, r − 1."""
        return {a: self.coefficient(a, prime, precision) for a in range(1, self.r)}

    def check_integrality(self, precision: int) -> None:
        """Check that every coefficient is an r-adic integer to the given precision."""
        self.coefficients(self.r, precision)

    def __str__(self) -> str:
        """Return the name of the element."""
        return "θ₁" if self.kind == "theta1" else f"θ₂(p = {self.p})"


def theta1_build(r: int) -> StickelbergerElt:
    """Return θ₁ = Σ_a {a}·σ_a^(−1)."""
    check_prime(r)
    return StickelbergerElt(r, "theta1")


def theta2_build(r: int, p: int, *, precision: int = 3) -> StickelbergerElt:
    """Return the modified quadratic Stickelberger element θ₂ for the prime p ≡ 1 mod 24r.

    Primes with p ≡ 1 mod 24 and r | p − 1 are accepted with a warning; the r-integrality of the coefficients is
    checked to the given precision.
    """
    check_prime(r)
    if not isprime(p):
        message = f"{p} is not a prime"
        raise InputError(message)
    if (p - 1) % (24 * r):
        if (p - 1) % 24 or (p - 1) % r:
            message = f"θ₂ needs p ≡ 1 mod 24 and r | p − 1, got p = {p}, r = {r}"
            raise HypothesisError(message)
        LOGGER.warning("p = %d is not 1 mod 24·%d; the coefficients of θ₂ may fail to be %d-integral", p, r, r)
    theta = StickelbergerElt(r, "theta2", p)
    theta.check_integrality(precision)
    return theta


def primary_component(ideal_class: IdealClass, exponent: int, prime: int) -> IdealClass:
    """Return the ℓ-primary component of the class in a group of the given exponent; ℓ must divide the exponent."""
    power = prime ** factorint(exponent).get(prime, 0)
    cofactor = exponent // power
    return ideal_class * (cofactor * pow(cofactor, -1, power))


def apply_stickelberger(
    theta: StickelbergerElt, ideal_class: IdealClass, group: ClassGroup, *, precision: int | None = None
) -> IdealClass:
    """Return θ·c, computed per ℓ-primary component with the coefficients reduced mod the ℓ-part of the exponent.

    The precision, when given, is the ℓ-adic precision of the coefficients for every ℓ; it must cover the
    valuation of the exponent.
    """
    if theta.r != group.r:
        message = f"the Stickelberger element is for r = {theta.r}, the class group for r = {group.r}"
        raise InputError(message)
    if ideal_class.invariants != group.invariants:
        message = f"the class does not belong to {group}"
        raise InputError(message)
    result = group.zero()
    exponent = group.exponent
    for prime, valuation in sorted(factorint(exponent).items()):
        if precision is not None and precision < valuation:
            message = f"precision {precision} is below the {prime}-adic valuation {valuation} of the exponent"
            raise PrecisionError(message)
        component = primary_component(ideal_class, exponent, prime)
        if component.is_zero():
            continue
        modulus = prime**valuation
        for a, coefficient in theta.coefficients(prime, precision or valuation).items():
            if coefficient % modulus:
                result += group.galois_action(pow(a, -1, theta.r), component) * coefficient
    LOGGER.debug("%s · %s = %s", theta, ideal_class, result)
    return result


def annihilation_certificate(ideal_class: IdealClass, group: ClassGroup) -> PrincipalityCertificate | None:
    """Return a generator of θ₁·𝔞 for an ideal 𝔞 in the class, or None when θ₁·𝔞 is not principal.

    The ideal θ₁·𝔞 = Π_a σ_a^(−1)(𝔞)^a is built on the factor base, so the certificate can be re-verified by
    recomputing valuations.
    """
    if ideal_class.invariants != group.invariants:
        message = f"the class does not belong to {group}"
        raise InputError(message)
    r, vector = group.r, group.lift(ideal_class)
    image = vector_sum((a, group.factor_base.conjugate_vector(vector, pow(a, -1, r))) for a in range(1, r))
    certificate = group.principality_certificate(image)
    LOGGER.info("θ₁·%s is %s", ideal_class, "principal" if certificate else "not principal")
    return certificate
