"""Candidate elements for relation and generator searches."""

from __future__ import annotations

from collections.abc import Iterator
from itertools import combinations, islice, product

from .ideal import CycIdeal
from .integer import CycInt


def sparse_candidates(r: int, min_terms: int = 2, max_terms: int | None = None) -> Iterator[CycInt]:
    """Yield 1 ± ζ ± ζ^b₁ ± … with the given numbers of terms, which have small T₂ and hence small norms.

    The second term is always ζ: up to Galois conjugation every sparse element has this form.
    """
    for terms in range(min_terms, (max_terms or r - 1) + 1):
        for exponents in combinations(range(2, r - 1), terms - 2):
            for signs in product((1, -1), repeat=terms - 1):
                cyclic = [0] * r
                cyclic[0], cyclic[1] = 1, signs[0]
                for exponent, sign in zip(exponents, signs[1:], strict=True):
                    cyclic[exponent] = sign
                yield CycInt.from_cyclic(r, cyclic)


def small_elements(ideal: CycIdeal, size: int = 3) -> Iterator[CycInt]:
    """Yield the LLL-reduced basis of the ideal and its signed sums of up to size basis elements."""
    basis = ideal.reduced_elements()
    for count in range(1, size + 1):
        for chosen in combinations(basis, count):
            for signs in product((1, -1), repeat=count - 1):
                element = chosen[0]
                for sign, other in zip(signs, chosen[1:], strict=True):
                    element += other * sign
                yield element


def find_generator(ideal: CycIdeal, budget: int) -> CycInt | None:
    """Return a small element of norm N(I), which generates the ideal, or None if the budget runs out."""
    for element in islice(small_elements(ideal), budget):
        if element.norm() == ideal.norm:
            return element
    return None
