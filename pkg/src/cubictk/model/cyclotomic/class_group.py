"""Class groups of ℤ[ζ_r] and ℤ[ζ_r, 1/2], computed from relations and certified by the analytic class number."""

from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from functools import cache
from itertools import chain
from math import prod

from sympy import factorint

from cubictk.errors import BudgetExhaustedError, CertificateMismatchError, HypothesisError, InputError
from cubictk.model.stickelberger.analytic import h_minus

from .factor_base import FactorBase, Vector, default_bound
from .ideal import CycIdeal, PrimeIdeal, split_prime
from .integer import CycInt, check_prime
from .relations import ReducedLattice, RelationLattice, add_multiple
from .search import find_generator, small_elements, sparse_candidates

DEFAULT_MAX_R = 23
DEFAULT_BUDGET = 4000

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class IdealClass:
    """Element of a finite abelian group ⊕ ℤ/d_i, given by its coordinates."""

    invariants: tuple[int, ...]
    coordinates: tuple[int, ...]

    def __post_init__(self) -> None:
        """Reduce the coordinates."""
        if len(self.coordinates) != len(self.invariants):
            message = f"expected {len(self.invariants)} coordinates, got {len(self.coordinates)}"
            raise InputError(message)
        reduced = tuple(value % d for value, d in zip(self.coordinates, self.invariants, strict=True))
        object.__setattr__(self, "coordinates", reduced)

    @classmethod
    def zero(cls, invariants: tuple[int, ...]) -> IdealClass:
        """Return the trivial class."""
        return cls(invariants, (0,) * len(invariants))

    def is_zero(self) -> bool:
        """Return whether this is the trivial class."""
        return not any(self.coordinates)

    def _check(self, other: IdealClass) -> None:
        """Check that both classes live in the same group."""
        if other.invariants != self.invariants:
            message = f"classes of different groups: {self.invariants} and {other.invariants}"
            raise InputError(message)

    def __add__(self, other: IdealClass) -> IdealClass:
        """Add the classes."""
        self._check(other)
        return IdealClass(self.invariants, tuple(a + b for a, b in zip(self.coordinates, other.coordinates)))

    def __neg__(self) -> IdealClass:
        """Return the inverse class."""
        return IdealClass(self.invariants, tuple(-a for a in self.coordinates))

    def __sub__(self, other: IdealClass) -> IdealClass:
        """Subtract the classes."""
        return self + (-other)

    def __mul__(self, factor: int) -> IdealClass:
        """Return a multiple of the class."""
        return IdealClass(self.invariants, tuple(a * factor for a in self.coordinates))

    __rmul__ = __mul__

    def order(self) -> int:
        """Return the order of the class."""
        result = 1
        while not (self * result).is_zero():
            result += 1
        return result

    def __str__(self) -> str:
        """Return the coordinates with their moduli."""
        if not self.invariants:
            return "0"
        return "(" + ", ".join(f"{a} mod {d}" for a, d in zip(self.coordinates, self.invariants)) + ")"


@dataclass(frozen=True)
class Relation:
    """A nonzero element whose principal ideal factors over the factor base."""

    element: CycInt
    vector: Vector


@dataclass(frozen=True)
class PrincipalityCertificate:
    """The ideal with the given exponent vector equals (Π x_j^(e_j))."""

    vector: Vector
    elements: tuple[CycInt, ...]
    exponents: tuple[int, ...]

    def verify(self, factor_base: FactorBase) -> bool:
        """Recompute the valuations of the elements and check that they add up to the vector."""
        total: Vector = {}
        for element, exponent in zip(self.elements, self.exponents, strict=True):
            valuations = factor_base.valuations(element)
            if valuations is None:
                return False
            add_multiple(total, valuations, exponent)
        return total == {position: value for position, value in self.vector.items() if value}


class ClassGroup:
    """The class group of ℤ[ζ_r], or of ℤ[ζ_r, 1/2] when the primes above 2 are inverted."""

    def __init__(
        self,
        factor_base: FactorBase,
        relations: list[Relation],
        lattice: ReducedLattice,
        inverted: tuple[PrimeIdeal, ...] = (),
    ) -> None:
        self.factor_base = factor_base
        self.relations = relations
        self.lattice = lattice
        self.inverted = inverted  # Primes whose classes are divided out

    @property
    def r(self) -> int:
        """Return the prime r."""
        return self.factor_base.r

    @property
    def invariants(self) -> tuple[int, ...]:
        """Return the invariant factors d₁ | d₂ | ⋯ larger than one."""
        return self.lattice.invariants

    @property
    def order(self) -> int:
        """Return the number of classes."""
        return prod(self.invariants)

    @property
    def exponent(self) -> int:
        """Return the exponent of the group."""
        return self.invariants[-1] if self.invariants else 1

    def is_trivial(self) -> bool:
        """Return whether every ideal is principal."""
        return not self.invariants

    def zero(self) -> IdealClass:
        """Return the trivial class."""
        return IdealClass.zero(self.invariants)

    def generators(self) -> list[IdealClass]:
        """Return the classes of the standard generators of ⊕ ℤ/d_i."""
        size = len(self.invariants)
        return [IdealClass(self.invariants, tuple(int(i == j) for j in range(size))) for i in range(size)]

    def class_of_vector(self, vector: Vector) -> IdealClass:
        """Return the class of the ideal with the given exponent vector on the factor base."""
        return IdealClass(self.invariants, self.lattice.coordinates(vector))

    def vector_of_prime(self, prime: PrimeIdeal, budget: int = DEFAULT_BUDGET) -> Vector:
        """Return an exponent vector on the factor base in the class of the prime."""
        if prime in self.factor_base.index:
            return {self.factor_base.index[prime]: 1}
        for candidate in small_elements(prime.ideal()):
            if budget <= 0:
                break
            budget -= 1
            norm = candidate.norm()
            cofactor = norm // prime.norm
            if cofactor % prime.p == 0:
                continue
            if (valuations := self.factor_base.valuations(candidate, cofactor)) is not None:
                # (x) = 𝔭·Π 𝔮^v, so 𝔭 is in the class of −Σ v·𝔮
                return {position: -value for position, value in valuations.items()}
        message = f"no smooth element found in {prime} within the budget"
        raise BudgetExhaustedError(message)

    def class_of_prime(self, prime: PrimeIdeal) -> IdealClass:
        """Return the class of a prime ideal."""
        if prime in self.inverted or self.is_trivial():
            return self.zero()
        return self.class_of_vector(self.vector_of_prime(prime))

    def class_of(self, ideal: CycIdeal | PrimeIdeal) -> IdealClass:
        """Return the class of an ideal."""
        if isinstance(ideal, PrimeIdeal):
            return self.class_of_prime(ideal)
        result = self.zero()
        for p in factorint(ideal.norm):
            for prime in split_prime(self.r, int(p)):
                if valuation := ideal.valuation(prime):
                    result += self.class_of_prime(prime) * valuation
        return result

    def lift(self, ideal_class: IdealClass) -> Vector:
        """Return an exponent vector on the factor base in the given class."""
        return self.lattice.lift(ideal_class.coordinates)

    def galois_action(self, a: int, ideal_class: IdealClass) -> IdealClass:
        """Return σ_a of the class."""
        return self.class_of_vector(self.factor_base.conjugate_vector(self.lift(ideal_class), a))

    def conjugate(self, ideal_class: IdealClass) -> IdealClass:
        """Return the complex conjugate σ_(−1) of the class."""
        return self.galois_action(-1, ideal_class)

    def ideal_of_vector(self, vector: Vector) -> CycIdeal:
        """Return Π 𝔭^(v_𝔭) for an exponent vector with non-negative entries."""
        if any(value < 0 for value in vector.values()):
            message = "only ideals with non-negative exponents can be built"
            raise InputError(message)
        ideal = CycIdeal.unit(self.r)
        for position, value in sorted(vector.items()):
            ideal = ideal.times(self.factor_base.primes[position].ideal().power(value))
        return ideal

    def principality_certificate(
        self, vector: Vector, budget: int = DEFAULT_BUDGET
    ) -> PrincipalityCertificate | None:
        """Return a generator of the ideal with the exponent vector, or None when the ideal is not principal.

        For integral ideals a single small generator is searched first; otherwise, or when the search runs out of
        budget, the generator is a product of relation elements.
        """
        if self.inverted:
            message = "principality certificates are available for Cl(ℤ[ζ_r]) only"
            raise InputError(message)
        coefficients = self.lattice.express(vector)
        if coefficients is None:
            return None
        if all(value >= 0 for value in vector.values()):
            ideal = self.ideal_of_vector(vector)
            if (generator := find_generator(ideal, budget)) is not None:
                LOGGER.debug("generator %s of norm %d", generator, ideal.norm)
                return PrincipalityCertificate(dict(vector), (generator,), (1,))
        positions = sorted(coefficients)
        return PrincipalityCertificate(
            dict(vector),
            tuple(self.relations[position].element for position in positions),
            tuple(coefficients[position] for position in positions),
        )

    def __str__(self) -> str:
        """Return the structure of the group."""
        ring = f"ℤ[ζ_{self.r}, 1/2]" if self.inverted else f"ℤ[ζ_{self.r}]"
        structure = " × ".join(f"ℤ/{d}" for d in self.invariants) or "1"
        return f"Cl({ring}) = {structure}"


def _candidates(factor_base: FactorBase) -> Iterator[CycInt]:
    """Yield the candidates of the relation search: short sparse elements, small elements of the primes, the rest."""
    return chain(
        sparse_candidates(factor_base.r, max_terms=3),
        chain.from_iterable(small_elements(prime.ideal(), 1) for prime in factor_base.orbit_representatives()),
        sparse_candidates(factor_base.r, min_terms=4, max_terms=4),
        chain.from_iterable(small_elements(prime.ideal(), 2) for prime in factor_base.orbit_representatives()),
        sparse_candidates(factor_base.r, min_terms=5),
    )


@cache
def class_group(
    r: int,
    *,
    invert_two: bool = False,
    factor_base_bound: int | None = None,
    budget: int = DEFAULT_BUDGET,
    max_r: int = DEFAULT_MAX_R,
) -> ClassGroup:
    """Return the class group of ℤ[ζ_r], or of ℤ[ζ_r, 1/2], certified against h⁻ under the assumption h⁺ = 1."""
    check_prime(r)
    if r > max_r:
        message = f"class groups are computed for r ≤ {max_r}, got {r}"
        raise HypothesisError(message)
    factor_base = FactorBase(r, factor_base_bound or default_bound(r))
    certificate = h_minus(r)
    LOGGER.info(
        "factor base of %d primes of norm ≤ %d; expecting order %d", len(factor_base), factor_base.bound, certificate
    )
    lattice = RelationLattice(len(factor_base))
    relations: list[Relation] = []
    for tried, candidate in enumerate(_candidates(factor_base)):
        if tried >= budget:
            break
        if (vector := factor_base.valuations(candidate)) is None:
            continue
        added = False
        for a in range(1, r):
            conjugate = factor_base.conjugate_vector(vector, a)
            if lattice.add(conjugate):
                relations.append(Relation(candidate.galois(a), conjugate))
                added = True
        if not added or len(lattice) < len(factor_base):
            continue
        reduced = lattice.reduce()
        if (order := reduced.order) is None or order > certificate:
            continue
        if order < certificate:
            message = (
                f"the factor base of norm ≤ {factor_base.bound} generates a group of order {order}, "
                f"but h⁻({r}) = {certificate}"
            )
            raise CertificateMismatchError(message)
        LOGGER.info("order %d certified after %d candidates and %d relations", order, tried + 1, len(lattice))
        group = ClassGroup(factor_base, relations, reduced)
        return _invert_two(group, lattice, budget) if invert_two else group
    message = f"no certified class group for r = {r} within a budget of {budget} candidates"
    raise BudgetExhaustedError(message)


def _invert_two(group: ClassGroup, lattice: RelationLattice, budget: int) -> ClassGroup:
    """Divide out the classes of the primes above 2."""
    quotient = lattice.copy()
    above_two = split_prime(group.r, 2)
    for prime in above_two:
        quotient.add(group.vector_of_prime(prime, budget))
    LOGGER.info("inverted the %d primes above 2", len(above_two))
    inverted = (*above_two, *split_prime(group.r, group.r))
    return ClassGroup(group.factor_base, group.relations, quotient.reduce(), inverted)
