"""Bounds on the kernel of Θ_n: Pic(ℤ[G]) → C_ℤ(G;n)."""

from __future__ import annotations

from sympy import isprime, multiplicity, primefactors

from cubictk.errors import InputError
from cubictk.model.bernoulli import e_of_k
from cubictk.model.group.abelian import FiniteAbelianGroup


def _check_n(n: int) -> None:
    """Check that Θ_n is defined."""
    if n < 2:
        message = f"Θ_n needs n ≥ 2, got {n}"
        raise InputError(message)


def kernel_annihilator_bound(n: int, group: FiniteAbelianGroup, *, vandiver_mode: bool = False) -> int:
    """Return Π_(k=1..n−1) Π_(p | e(k)) |#G|_p^(−1), an integer annihilating ker(Θ_n); 1 when 2 ≤ n ≤ 5.

    Without the Vandiver assumption e(k) is unknown for odd k ≥ 3, and an UnknownValueError is raised as soon as
    such an e(k) is needed.
    """
    _check_n(n)
    if n <= 5:
        return 1
    order = group.order
    bound = 1
    for k in range(1, n):
        for p in primefactors(e_of_k(k, vandiver=vandiver_mode)):
            bound *= p ** multiplicity(p, order)
    return bound


def kernel_is_trivial_for_prime_order(n: int, group: FiniteAbelianGroup, *, vandiver_mode: bool = False) -> bool:
    """Return whether ker(Θ_n) is known to be trivial: for 2 ≤ n ≤ 5, or for #G a prime ≥ n satisfying Vandiver."""
    _check_n(n)
    return n <= 5 or (vandiver_mode and isprime(group.order) and group.order >= n)
