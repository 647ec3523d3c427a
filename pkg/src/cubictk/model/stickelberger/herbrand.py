"""Herbrand's criterion relating eigenspaces of the class group to Bernoulli numbers."""

from cubictk.errors import HypothesisError
from cubictk.model.bernoulli import is_irregular_pair
from cubictk.model.cyclotomic.integer import check_prime

from .eigen import EigenDecomp


def herbrand_test(r: int, k: int) -> bool:
    """Return whether r divides the numerator of B_k, for a prime r ≥ 5 and even 2 ≤ k ≤ r − 3.

    By Herbrand's theorem the ω^(1−k) eigenspace of the r-part of Cl(ℤ[ζ_r]) can only be nontrivial if it does.
    """
    check_prime(r)
    if r < 5 or k % 2 or not 2 <= k <= r - 3:
        message = f"the Herbrand test needs a prime r ≥ 5 and even 2 ≤ k ≤ r − 3, got r = {r}, k = {k}"
        raise HypothesisError(message)
    return is_irregular_pair(r, k)


def herbrand_index(r: int, j: int) -> int | None:
    """Return the k with ω^j = ω^(1−k) for odd 3 ≤ j ≤ r − 2, the range where Herbrand's theorem applies."""
    if j % 2 == 0 or not 3 <= j <= r - 2:
        return None
    return r - j


def herbrand_consistent(r: int, decomposition: EigenDecomp) -> bool:
    """Return whether every nonzero eigenspace C_j of the r-part with odd 3 ≤ j ≤ r − 2 has r | B_(r−j)."""
    if decomposition.prime != r:
        message = f"Herbrand's theorem concerns the {r}-part, got the {decomposition.prime}-part"
        raise HypothesisError(message)
    indices = (herbrand_index(r, component.j) for component in decomposition.components)
    return all(herbrand_test(r, k) for k in indices if k is not None)
