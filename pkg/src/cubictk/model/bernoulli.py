"""Bernoulli numbers, Bernoulli polynomials and generalized Bernoulli numbers."""

from __future__ import annotations

from fractions import Fraction
from math import comb, prod

from sympy import divisors, isprime, multiplicity, primerange

from cubictk.errors import HypothesisError, InputError, UnknownValueError

from .group.cyclotomic_number import CycNumber
from .group.dirichlet import DirichletCharacter


_BERNOULLI_NUMBERS: list[Fraction] = [Fraction(1)]  # B_0, B_1, … computed so far; B_1 = −1/2


def _extend_bernoulli_numbers(k: int) -> None:
    """Extend the cached Bernoulli numbers up to B_k with the recurrence Σ_(j≤n) C(n + 1, j) B_j = 0."""
    for n in range(len(_BERNOULLI_NUMBERS), k + 1):
        if n > 1 and n % 2:
            _BERNOULLI_NUMBERS.append(Fraction(0))
            continue
        total = sum((comb(n + 1, j) * b for j, b in enumerate(_BERNOULLI_NUMBERS)), Fraction(0))
        _BERNOULLI_NUMBERS.append(-total / (n + 1))


def bernoulli(k: int) -> Fraction:
    """Return the Bernoulli number B_k, defined by t/(e^t − 1) = Σ B_k t^k/k!."""
    if k < 0:
        message = f"Bernoulli numbers are defined for k ≥ 0, got {k}"
        raise InputError(message)
    _extend_bernoulli_numbers(k)
    return _BERNOULLI_NUMBERS[k]


def bernoulli_mod(k: int, prime: int) -> int:
    """Return B_k mod ℓ, computed over 𝔽_ℓ; needs k ≤ ℓ − 3 so that no denominator vanishes mod ℓ."""
    if not isprime(prime) or not 0 <= k <= prime - 3:
        message = f"B_k mod ℓ needs a prime ℓ and 0 ≤ k ≤ ℓ − 3, got k = {k}, ℓ = {prime}"
        raise InputError(message)
    values = [1]
    for n in range(1, k + 1):
        if n > 1 and n % 2:
            values.append(0)
            continue
        total = sum(comb(n + 1, j) * b for j, b in enumerate(values)) % prime
        values.append(-total * pow(n + 1, -1, prime) % prime)
    return values[k]


def bernoulli_polynomial(k: int, x: Fraction | int) -> Fraction:
    """Return B_k(x) = Σ_j C(k, j) B_j x^(k−j)."""
    x = Fraction(x)
    return sum((comb(k, j) * bernoulli(j) * x ** (k - j) for j in range(k + 1)), Fraction(0))


def von_staudt_clausen_denominator(k: int) -> int:
    """Return Π p over the primes p with (p − 1) | k, the denominator of B_k for even k ≥ 2."""
    return prod(divisor + 1 for divisor in divisors(k) if isprime(divisor + 1))


def e_of_k(k: int, *, vandiver: bool = False) -> int:
    """Return e(k): 1 for k = 1, |numerator(B_k/k)| for even k, and 1 for odd k under the Vandiver assumption."""
    if k < 1:
        message = f"e(k) is defined for k ≥ 1, got {k}"
        raise InputError(message)
    if k == 1:
        return 1
    if k % 2 == 0:
        return abs((bernoulli(k) / k).numerator)
    if vandiver:
        return 1
    message = f"e({k}) depends on the order of K_{2 * k - 2}(ℤ); pass the Vandiver assumption to use e({k}) = 1"
    raise UnknownValueError(message)


def gen_bernoulli(k: int, character: DirichletCharacter) -> CycNumber:
    """Return B_(k,χ) = f^(k−1) Σ_(a=1..f) χ(a) B_k(a/f), f the conductor of the primitive character χ.

    The trivial character has conductor 1 and gives B_k(1), so B_(1,1) = +1/2.
    """
    if k < 0:
        message = f"generalized Bernoulli numbers are defined for k ≥ 0, got {k}"
        raise InputError(message)
    f = character.conductor
    root_order = character.root_order
    if f == 1:
        return CycNumber.from_rational(bernoulli_polynomial(k, 1), root_order)
    cyclic = [Fraction(0)] * root_order
    for a in range(1, f):
        cyclic[character.value_exponent(a)] += bernoulli_polynomial(k, Fraction(a, f))
    return CycNumber.from_cyclic(root_order, cyclic) * Fraction(f) ** (k - 1)


def kummer_congruence_holds(p: int, k: int, k_prime: int) -> bool:
    """Return whether (1 − p^(k−1))B_k/k ≡ (1 − p^(k′−1))B_k′/k′ mod p.

    Both indices must be even, positive and not divisible by p − 1, and congruent modulo p − 1.
    """
    for index in (k, k_prime):
        if index <= 0 or index % 2 or index % (p - 1) == 0:
            message = f"the Kummer congruence mod {p} needs even k ≢ 0 mod {p - 1}, got {index}"
            raise HypothesisError(message)
    if (k - k_prime) % (p - 1):
        message = f"{k} and {k_prime} are not congruent mod {p - 1}"
        raise HypothesisError(message)

    def kummer_value(index: int) -> Fraction:
        """Return (1 − p^(k−1))B_k/k."""
        return (1 - p ** (index - 1)) * bernoulli(index) / index

    difference = kummer_value(k) - kummer_value(k_prime)
    return difference == 0 or multiplicity(p, abs(difference.numerator)) > multiplicity(p, difference.denominator)


def is_irregular_pair(r: int, k: int) -> bool:
    """Return whether r divides the numerator of B_k, for even 2 ≤ k ≤ r − 3."""
    if k % 2 or not 2 <= k <= r - 3:
        message = f"irregular pairs (r, k) need even 2 ≤ k ≤ r − 3, got ({r}, {k})"
        raise InputError(message)
    return bernoulli_mod(k, r) == 0


def irregular_pairs(bound: int) -> list[tuple[int, int]]:
    """Return the irregular pairs (r, k) with r < bound."""
    return [(r, k) for r in primerange(5, bound) for k in range(2, r - 2, 2) if is_irregular_pair(r, k)]
