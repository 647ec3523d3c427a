"""Gauss sums of characters of order r mod p, computed exactly in ℤ[ζ_pr], and the factorization of τ(ψ)^r."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import reduce

from sympy import isprime

from cubictk.errors import BudgetExhaustedError, HypothesisError, InputError
from cubictk.model.cyclotomic.ideal import PrimeIdeal, split_prime
from cubictk.model.cyclotomic.integer import CycInt, check_prime
from cubictk.model.cyclotomic.pchi import p_chi
from cubictk.model.group.cyclotomic_number import CycNumber
from cubictk.model.group.dirichlet import DirichletCharacter

DEFAULT_DEGREE_BUDGET = 60

LOGGER = logging.getLogger(__name__)


def gauss_sum(character: DirichletCharacter) -> CycNumber:
    """Return τ(ψ) = Σ_(j ∈ (ℤ/p)^*) ψ(j)·ζ_p^j in ℚ(ζ_pm), m the root order of ψ.

    The trivial character gives −1.
    """
    p, m = character.modulus, character.root_order
    cyclic = [0] * (p * m)
    for j in range(1, p):
        cyclic[(character.value_exponent(j) * p + j * m) % (p * m)] += 1
    return CycNumber.from_cyclic(p * m, cyclic)


def jacobi_sum(first: DirichletCharacter, second: DirichletCharacter, r: int) -> CycInt:
    """Return J(ψ₁, ψ₂) = Σ_(x ≠ 0, 1) ψ₁(x)·ψ₂(1 − x) for characters with values in μ_r."""
    p = first.modulus
    cyclic = [0] * r
    for x in range(2, p):
        cyclic[(first.value_exponent(x) + second.value_exponent(1 - x)) % r] += 1
    return CycInt.from_cyclic(r, cyclic)


def _as_number(element: CycInt) -> CycNumber:
    """Return the element of ℤ[ζ_r] as cyclotomic number."""
    return CycNumber(element.r, element.coeffs)


@dataclass(frozen=True)
class GaussSumReport:
    """The checks on τ(ψ) for ψ(g) = ζ_r^exponent, g the least primitive root mod p."""

    p: int
    r: int
    exponent: int
    tau: CycNumber
    norm_identity: bool  # τ(ψ)·τ(ψ̄) = p, or τ = −1 for trivial ψ
    jacobi_identity: bool = True  # τ(ψ)^r = p·Π_(i=1..r−2) J(ψ, ψ^i)
    supported_above_p: bool = True
    valuations: dict[PrimeIdeal, int] = field(default_factory=dict)
    expected_valuations: dict[PrimeIdeal, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        """Return whether all checks succeeded."""
        return (
            self.norm_identity
            and self.jacobi_identity
            and self.supported_above_p
            and self.valuations == self.expected_valuations
        )


def gauss_sum_check(p: int, r: int, exponent: int = 1, *, degree_budget: int = DEFAULT_DEGREE_BUDGET) -> GaussSumReport:
    """Compute τ(ψ) for the character ψ of order dividing r and check its norm and the factorization of τ(ψ)^r.

    Stickelberger's theorem predicts v_(P_(ψ^b))(τ(ψ)^r) = r − (b^(−1) mod r) for the primes P_(ψ^b) above p.
    """
    check_prime(r)
    if not isprime(p):
        message = f"{p} is not a prime"
        raise InputError(message)
    if (p - 1) % r:
        message = f"Gauss sums of order {r} need r | p − 1, got p = {p}"
        raise HypothesisError(message)
    if (degree := (p - 1) * (r - 1)) > degree_budget:
        message = f"ℚ(ζ_{p * r}) has degree {degree}, more than the budget of {degree_budget}"
        raise BudgetExhaustedError(message)
    character = DirichletCharacter(p, r, exponent)
    tau = gauss_sum(character)
    if character.is_trivial():
        return GaussSumReport(p, r, 0, tau, tau == CycNumber.from_rational(-1, p * r))
    conjugate = DirichletCharacter(p, r, -exponent)
    # ψ has odd order, so ψ(−1) = 1
    norm_identity = tau * gauss_sum(conjugate) == CycNumber.from_rational(p, p * r)
    jacobi = [jacobi_sum(character, DirichletCharacter(p, r, exponent * i), r) for i in range(1, r - 1)]
    power = reduce(CycInt.__mul__, jacobi, CycInt.from_int(r, p))
    jacobi_identity = tau**r == _as_number(power).lift(p * r)
    supported = power.norm() == p ** (r * (r - 1) // 2)
    valuations = {prime: prime.valuation(power) for prime in split_prime(r, p)}
    expected = {p_chi(r, p, DirichletCharacter(p, r, exponent * b)): r - pow(b, -1, r) for b in range(1, r)}
    report = GaussSumReport(p, r, exponent % r, tau, norm_identity, jacobi_identity, supported, valuations, expected)
    LOGGER.info("τ(ψ) for p = %d, r = %d: %s", p, r, "passed" if report.passed else "FAILED")
    return report
