"""Factor bases of prime ideals of ℤ[ζ_r]."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property

from sympy import primerange
from sympy.ntheory import multiplicity, n_order

from cubictk.errors import InputError

from .ideal import PrimeIdeal, split_prime
from .integer import CycInt, check_prime

Vector = dict[int, int]  # Sparse exponent vector on the factor base


def default_bound(r: int) -> int:
    """Return the default norm bound max(200, 2r²)."""
    return max(200, 2 * r * r)


@dataclass(frozen=True)
class FactorBase:
    """All prime ideals of ℤ[ζ_r] of norm at most the bound, λ = (1 − ζ_r) first.

    The factor base is stable under the Galois group, so σ_a acts on it by a permutation.
    """

    r: int
    bound: int
    primes: tuple[PrimeIdeal, ...] = field(init=False)

    def __post_init__(self) -> None:
        """Collect the primes."""
        check_prime(self.r)
        primes = list(split_prime(self.r, self.r))
        for p in primerange(2, self.bound + 1):
            if p != self.r and p ** int(n_order(p, self.r)) <= self.bound:
                primes.extend(split_prime(self.r, p))
        object.__setattr__(self, "primes", tuple(primes))

    def __len__(self) -> int:
        """Return the number of primes."""
        return len(self.primes)

    @cached_property
    def index(self) -> dict[PrimeIdeal, int]:
        """Return the position of each prime."""
        return {prime: position for position, prime in enumerate(self.primes)}

    @cached_property
    def primes_above(self) -> dict[int, list[PrimeIdeal]]:
        """Return the primes of the base grouped by rational prime."""
        grouped = defaultdict(list)
        for prime in self.primes:
            grouped[prime.p].append(prime)
        return dict(grouped)

    def orbit_representatives(self) -> list[PrimeIdeal]:
        """Return one prime per Galois orbit."""
        return [primes[0] for primes in self.primes_above.values()]

    def valuations(self, element: CycInt, norm: int | None = None) -> Vector | None:
        """Return the exponent vector of (x) if x is smooth over the base, None otherwise.

        Pass the norm to restrict the factorization to the primes dividing it.
        """
        remaining = element.norm() if norm is None else norm
        if remaining == 0:
            return None
        dividing = []
        for p in self.primes_above:
            if remaining % p == 0:
                remaining //= p ** int(multiplicity(p, remaining))
                dividing.append(p)
        if remaining != 1:
            return None
        vector: Vector = {}
        for p in dividing:
            for prime in self.primes_above[p]:
                if valuation := prime.valuation(element):
                    vector[self.index[prime]] = valuation
        return vector

    def permutation(self, a: int) -> tuple[int, ...]:
        """Return the permutation of positions induced by σ_a."""
        if a % self.r == 0:
            message = f"σ_{a} is not an automorphism of ℚ(ζ_{self.r})"
            raise InputError(message)
        return self._permutations[a % self.r]

    @cached_property
    def _permutations(self) -> dict[int, tuple[int, ...]]:
        """Return the permutations for all a ∈ (ℤ/r)^*."""
        return {a: tuple(self.index[prime.galois(a)] for prime in self.primes) for a in range(1, self.r)}

    def conjugate_vector(self, vector: Vector, a: int) -> Vector:
        """Return the exponent vector of σ_a of the ideal with the given exponent vector."""
        permutation = self.permutation(a)
        return {permutation[position]: value for position, value in vector.items()}
