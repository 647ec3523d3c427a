"""Ideals and prime ideals of ℤ[ζ_r]."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cache, cached_property
from math import prod

from sympy import Matrix, Poly, cyclotomic_poly, symbols
from sympy.matrices.normalforms import hermite_normal_form
from sympy.ntheory import isprime, multiplicity
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from cubictk.errors import InputError

from .integer import CycInt, check_prime

Basis = tuple[tuple[int, ...], ...]


def row_hermite_form(rows: Sequence[Sequence[int]], modulus: int) -> Basis:
    """Return the lower triangular row HNF of the lattice spanned by the rows.

    The lattice must have full rank and the modulus must be a multiple of its determinant.
    """
    columns = Matrix(rows).T
    hnf = hermite_normal_form(columns, D=abs(modulus))
    return tuple(tuple(int(value) for value in hnf[:, j]) for j in range(hnf.cols))


def lll_reduce(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Return an LLL-reduced basis of the lattice spanned by the linearly independent rows."""
    matrix = DomainMatrix([[ZZ(value) for value in row] for row in rows], (len(rows), len(rows[0])), ZZ)
    return [[int(value) for value in row] for row in matrix.lll().to_list()]


def _reduce_polynomial(coefficients: Sequence[int], factor: Sequence[int], p: int) -> list[int]:
    """Return the remainder of the polynomial modulo the monic factor, over 𝔽_p; lowest degree first."""
    remainder = [value % p for value in coefficients]
    degree = len(factor) - 1
    for top in range(len(remainder) - 1, degree - 1, -1):
        lead = remainder[top]
        if lead:
            for index in range(degree + 1):
                position = top - degree + index
                remainder[position] = (remainder[position] - lead * factor[index]) % p
    return remainder[:degree]


@dataclass(frozen=True, order=True)
class PrimeIdeal:
    """The prime ideal (p, g(ζ_r)) for a monic irreducible factor g of Φ_r mod p."""

    p: int
    factor: tuple[int, ...]  # Coefficients of g in [0, p), lowest degree first
    r: int

    @property
    def residue_degree(self) -> int:
        """Return the residue degree f, the order of p mod r for unramified p."""
        return len(self.factor) - 1

    @property
    def norm(self) -> int:
        """Return the absolute norm p^f."""
        return self.p**self.residue_degree

    @property
    def is_ramified(self) -> bool:
        """Return whether this is the prime (1 − ζ_r) above r."""
        return self.p == self.r

    def generator(self) -> CycInt:
        """Return g(ζ_r); together with p it generates the prime."""
        return CycInt.from_cyclic(self.r, self.factor)

    @cached_property
    def cofactor(self) -> CycInt:
        """Return τ = (Φ_r/g)(ζ_r), which lies in every other prime above p but not in this one."""
        x = symbols("x")
        phi = Poly(cyclotomic_poly(self.r, x), x, modulus=self.p)
        quotient = phi.quo(Poly(list(reversed(self.factor)), x, modulus=self.p))
        return CycInt.from_cyclic(self.r, [int(value) % self.p for value in reversed(quotient.all_coeffs())])

    def contains(self, element: CycInt) -> bool:
        """Return whether the element lies in the prime."""
        return not any(_reduce_polynomial(element.coeffs, self.factor, self.p))

    def valuation(self, element: CycInt) -> int:
        """Return the exponent of the prime in the principal ideal of a nonzero element."""
        if element.is_zero():
            message = "the valuation of 0 is infinite"
            raise InputError(message)
        if self.is_ramified:
            return int(multiplicity(self.r, element.norm()))
        valuation = 0
        while self.contains(element):
            element = (element * self.cofactor).divide_exactly(self.p)
            valuation += 1
        return valuation

    def galois(self, a: int) -> PrimeIdeal:
        """Return σ_a of the prime."""
        if self.is_ramified:
            return self
        image = self.generator().galois(a)
        return next(prime for prime in split_prime(self.r, self.p) if prime.contains(image))

    def ideal(self) -> CycIdeal:
        """Return the prime as ideal with HNF basis p·ζ^i (i < f), g·ζ^k (k < r − 1 − f)."""
        n, f = self.r - 1, self.residue_degree
        rows = [[self.p if index == i else 0 for index in range(n)] for i in range(f)]
        zeta, current = CycInt.zeta(self.r), self.generator()
        for _ in range(n - f):
            rows.append(list(current.coeffs))
            current *= zeta
        generators = (CycInt.from_int(self.r, self.p), self.generator())
        return CycIdeal(self.r, row_hermite_form(rows, self.norm), generators)

    def __str__(self) -> str:
        """Return the prime as two-element ideal."""
        return f"({self.p}, {self.generator()})"


@cache
def split_prime(r: int, p: int) -> tuple[PrimeIdeal, ...]:
    """Return the primes of ℤ[ζ_r] above the rational prime p; for p = r this is (1 − ζ_r), with (r) = λ^(r−1)."""
    check_prime(r)
    if not isprime(p):
        message = f"{p} is not a prime"
        raise InputError(message)
    if p == r:
        return (PrimeIdeal(r, (r - 1, 1), r),)
    x = symbols("x")
    _, factors = Poly(cyclotomic_poly(r, x), x, modulus=p).factor_list()
    primes = []
    for factor, _multiplicity in factors:
        coefficients = tuple(int(value) % p for value in reversed(factor.all_coeffs()))
        primes.append(PrimeIdeal(p, coefficients, r))
    return tuple(sorted(primes))


@dataclass(frozen=True)
class CycIdeal:
    """Nonzero ideal of ℤ[ζ_r], canonically given by the row HNF of its ℤ-basis."""

    r: int
    basis: Basis
    generators: tuple[CycInt, ...] = field(default=(), compare=False)

    @classmethod
    def unit(cls, r: int) -> CycIdeal:
        """Return the ideal ℤ[ζ_r]."""
        rows = tuple(tuple(int(i == j) for j in range(r - 1)) for i in range(r - 1))
        return cls(r, rows, (CycInt.from_int(r, 1),))

    @classmethod
    def from_generators(cls, r: int, generators: Iterable[CycInt | int]) -> CycIdeal:
        """Return the ideal generated by the elements."""
        elements = [CycInt.from_int(r, g) if isinstance(g, int) else g for g in generators]
        elements = [element for element in elements if not element.is_zero()]
        if not elements:
            message = "the zero ideal is not supported"
            raise InputError(message)
        rows = [row for element in elements for row in element.multiplication_rows()]
        modulus = min(element.norm() for element in elements)
        return cls(r, row_hermite_form(rows, modulus), tuple(elements))

    @cached_property
    def norm(self) -> int:
        """Return the absolute norm, the index of the ideal in ℤ[ζ_r]."""
        return prod(row[index] for index, row in enumerate(self.basis))

    def elements(self) -> list[CycInt]:
        """Return the ℤ-basis as elements."""
        return [CycInt(self.r, row) for row in self.basis]

    def coordinates(self, element: CycInt) -> tuple[int, ...] | None:
        """Return the coordinates of the element on the HNF basis, None if it is not in the ideal."""
        remainder = list(element.coeffs)
        coordinates = [0] * (self.r - 1)
        for index in range(self.r - 2, -1, -1):
            quotient, rest = divmod(remainder[index], self.basis[index][index])
            if rest:
                return None
            coordinates[index] = quotient
            if quotient:
                for position in range(index + 1):
                    remainder[position] -= quotient * self.basis[index][position]
        return tuple(coordinates)

    def contains(self, element: CycInt) -> bool:
        """Return whether the element lies in the ideal."""
        return self.coordinates(element) is not None

    def is_unit(self) -> bool:
        """Return whether this is the whole ring."""
        return self.norm == 1

    def times(self, other: CycIdeal) -> CycIdeal:
        """Return the product of the ideals."""
        multipliers = other.generators or tuple(other.elements())
        rows = [list((element * multiplier).coeffs) for multiplier in multipliers for element in self.elements()]
        return CycIdeal(self.r, row_hermite_form(rows, self.norm * other.norm))

    def power(self, exponent: int) -> CycIdeal:
        """Return the ideal to a non-negative power."""
        result, base = CycIdeal.unit(self.r), self
        while exponent:
            if exponent & 1:
                result = result.times(base)
            exponent >>= 1
            if exponent:
                base = base.times(base)
        return result

    def galois(self, a: int) -> CycIdeal:
        """Return σ_a of the ideal."""
        rows = [list(element.galois(a).coeffs) for element in self.elements()]
        generators = tuple(generator.galois(a) for generator in self.generators)
        return CycIdeal(self.r, row_hermite_form(rows, self.norm), generators)

    def valuation(self, prime: PrimeIdeal) -> int:
        """Return the exponent of the prime in the ideal."""
        return min(prime.valuation(element) for element in self.elements() if not element.is_zero())

    def reduced_elements(self) -> list[CycInt]:
        """Return an LLL-reduced ℤ-basis; its elements have small coordinates."""
        return [CycInt(self.r, tuple(row)) for row in lll_reduce(self.basis)]

    def __str__(self) -> str:
        """Return a short description of the ideal."""
        if len(self.generators) in (1, 2):
            return "(" + ", ".join(str(generator) for generator in self.generators) + ")"
        return f"ideal of norm {self.norm} in ℤ[ζ_{self.r}]"
