"""Exact numbers in cyclotomic fields.

Numbers are stored as integer coefficients over a common denominator. Products, inverses and norms are computed with
sympy's dense polynomials modulo the cyclotomic polynomial Φ_m.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import gcd

from sympy import QQ, ZZ, Poly, cyclotomic_poly, mobius, symbols, totient
from sympy.polys.polyclasses import ANP

from cubictk.tools import lcm

Scalar = int | Fraction

X = symbols("x")


@cache
def cyclotomic_polynomial(m: int) -> Poly:
    """Return the m-th cyclotomic polynomial over ℤ."""
    return Poly(cyclotomic_poly(m, X), X, domain=ZZ)


@cache
def cyclotomic_coefficients(m: int) -> tuple[int, ...]:
    """Return the coefficients of the m-th cyclotomic polynomial, lowest degree first."""
    return tuple(int(coefficient) for coefficient in reversed(cyclotomic_polynomial(m).all_coeffs()))


@cache
def _field_modulus(m: int) -> tuple[object, ...]:
    """Return Φ_m as the modulus of sympy's algebraic number polynomials: coefficients in QQ, highest degree first."""
    return tuple(QQ(int(coefficient)) for coefficient in cyclotomic_polynomial(m).all_coeffs())


@cache
def _basis_traces(m: int) -> tuple[int, ...]:
    """Return the traces Tr(ζ_m^k) for the power basis, which are Ramanujan sums."""
    traces = []
    for k in range(int(totient(m))):
        quotient = m // gcd(m, k)
        traces.append(int(mobius(quotient)) * int(totient(m)) // int(totient(quotient)))
    return tuple(traces)


def _padded(coefficients: Sequence[int], degree: int) -> list[int]:
    """Turn the coefficients of a polynomial, highest degree first, into a vector of the given length, lowest first."""
    lowest_first = [int(coefficient) for coefficient in reversed(coefficients)]
    return lowest_first + [0] * (degree - len(lowest_first))


def _reduce_cyclic(m: int, cyclic: Sequence[int]) -> list[int]:
    """Reduce a vector of coefficients of ζ^0, ..., ζ^(m-1) to the power basis mod Φ_m."""
    modulus = cyclotomic_polynomial(m)
    if not any(cyclic):
        return [0] * modulus.degree()
    remainder = Poly(list(reversed(cyclic)), X, domain=ZZ).rem(modulus)
    return _padded(remainder.all_coeffs(), modulus.degree())


@dataclass(frozen=True, eq=False)
class CycNumber:
    """Element of ℚ(ζ_m), stored as integer power-basis coefficients over a common positive denominator."""

    root_order: int
    coefficients: tuple[int, ...]
    denominator: int = 1

    def __post_init__(self) -> None:
        """Check the shape and bring the number into lowest terms."""
        if len(self.coefficients) != len(cyclotomic_coefficients(self.root_order)) - 1:
            message = f"expected {int(totient(self.root_order))} coefficients for root order {self.root_order}"
            raise ValueError(message)
        if self.denominator == 0:
            raise ZeroDivisionError(self.denominator)
        divisor = gcd(self.denominator, *self.coefficients)
        if self.denominator < 0:
            divisor = -divisor
        if divisor != 1:
            object.__setattr__(self, "coefficients", tuple(value // divisor for value in self.coefficients))
            object.__setattr__(self, "denominator", self.denominator // divisor)

    @classmethod
    def from_rational(cls, value: Scalar, root_order: int = 1) -> CycNumber:
        """Return the rational number as element of ℚ(ζ_m)."""
        value = Fraction(value)
        degree = len(cyclotomic_coefficients(root_order)) - 1
        return cls(root_order, (value.numerator,) + (0,) * (degree - 1), value.denominator)

    @classmethod
    def root_of_unity(cls, root_order: int, power: int = 1) -> CycNumber:
        """Return ζ_m^k."""
        cyclic = [0] * root_order
        cyclic[power % root_order] = 1
        return cls(root_order, tuple(_reduce_cyclic(root_order, cyclic)))

    @classmethod
    def from_cyclic(cls, root_order: int, values: Sequence[Scalar]) -> CycNumber:
        """Return Σ values[k]·ζ_m^k."""
        fractions = [Fraction(value) for value in values]
        denominator = lcm(*(value.denominator for value in fractions))
        numerators = [int(value * denominator) for value in fractions]
        return cls(root_order, tuple(_reduce_cyclic(root_order, numerators)), denominator)

    @classmethod
    def from_anp(cls, root_order: int, value: ANP) -> CycNumber:
        """Return the number represented by a sympy algebraic number polynomial modulo Φ_m."""
        fractions = [Fraction(int(QQ.numer(entry)), int(QQ.denom(entry))) for entry in value.to_list()]
        denominator = lcm(*(entry.denominator for entry in fractions))
        degree = len(cyclotomic_coefficients(root_order)) - 1
        numerators = [int(entry * denominator) for entry in fractions]
        return cls(root_order, tuple(_padded(numerators, degree)), denominator)

    def to_anp(self) -> ANP:
        """Return the number as sympy algebraic number polynomial modulo Φ_m."""
        coefficients = [QQ(value, self.denominator) for value in reversed(self.coefficients)]
        return ANP(coefficients, list(_field_modulus(self.root_order)), QQ)

    @property
    def degree(self) -> int:
        """Return the degree of the field the number is stored in."""
        return len(self.coefficients)

    def is_zero(self) -> bool:
        """Return whether the number is zero."""
        return not any(self.coefficients)

    def is_rational(self) -> bool:
        """Return whether the number is rational."""
        return not any(self.coefficients[1:])

    def as_rational(self) -> Fraction:
        """Return the number as rational, if it is one."""
        if not self.is_rational():
            message = f"{self} is not rational"
            raise ValueError(message)
        return Fraction(self.coefficients[0], self.denominator)

    def lift(self, root_order: int) -> CycNumber:
        """Return the number as element of ℚ(ζ_M) for a multiple M of the root order."""
        if root_order == self.root_order:
            return self
        if root_order % self.root_order:
            message = f"cannot embed ℚ(ζ_{self.root_order}) in ℚ(ζ_{root_order})"
            raise ValueError(message)
        step = root_order // self.root_order
        cyclic = [0] * root_order
        for k, value in enumerate(self.coefficients):
            cyclic[k * step] = value
        return CycNumber(root_order, tuple(_reduce_cyclic(root_order, cyclic)), self.denominator)

    def galois(self, s: int) -> CycNumber:
        """Apply the automorphism ζ ↦ ζ^s; s must be prime to the root order."""
        m = self.root_order
        cyclic = [0] * m
        for k, value in enumerate(self.coefficients):
            cyclic[k * s % m] += value
        return CycNumber(m, tuple(_reduce_cyclic(m, cyclic)), self.denominator)

    def trace(self) -> Fraction:
        """Return the trace to ℚ."""
        traces = _basis_traces(self.root_order)
        total = sum(value * trace for value, trace in zip(self.coefficients, traces, strict=True))
        return Fraction(total, self.denominator)

    def norm(self) -> Fraction:
        """Return the norm to ℚ, the resultant of Φ_m and the coefficient polynomial."""
        numerator = Poly(list(reversed(self.coefficients)), X, domain=ZZ)
        resultant = cyclotomic_polynomial(self.root_order).resultant(numerator)
        return Fraction(int(resultant), self.denominator**self.degree)

    def inverse(self) -> CycNumber:
        """Return the multiplicative inverse."""
        if self.is_zero():
            raise ZeroDivisionError(str(self))
        return CycNumber.from_anp(self.root_order, self.to_anp() ** -1)

    def _common(self, other: CycNumber | Scalar) -> tuple[CycNumber, CycNumber]:
        """Return both numbers in a common field."""
        if not isinstance(other, CycNumber):
            return self, CycNumber.from_rational(other, self.root_order)
        root_order = lcm(self.root_order, other.root_order)
        return self.lift(root_order), other.lift(root_order)

    def __add__(self, other: CycNumber | Scalar) -> CycNumber:
        """Add the numbers."""
        left, right = self._common(other)
        denominator = left.denominator * right.denominator
        coefficients = tuple(
            a * right.denominator + b * left.denominator
            for a, b in zip(left.coefficients, right.coefficients, strict=True)
        )
        return CycNumber(left.root_order, coefficients, denominator)

    __radd__ = __add__

    def __neg__(self) -> CycNumber:
        """Return the negated number."""
        return CycNumber(self.root_order, tuple(-value for value in self.coefficients), self.denominator)

    def __sub__(self, other: CycNumber | Scalar) -> CycNumber:
        """Subtract the numbers."""
        return self + (-other)

    def __rsub__(self, other: Scalar) -> CycNumber:
        """Subtract this number from a rational."""
        return -self + other

    def __mul__(self, other: CycNumber | Scalar) -> CycNumber:
        """Multiply the numbers."""
        if not isinstance(other, CycNumber):
            other = Fraction(other)
            return CycNumber(
                self.root_order,
                tuple(value * other.numerator for value in self.coefficients),
                self.denominator * other.denominator,
            )
        left, right = self._common(other)
        return CycNumber.from_anp(left.root_order, left.to_anp() * right.to_anp())

    __rmul__ = __mul__

    def __truediv__(self, other: CycNumber | Scalar) -> CycNumber:
        """Divide the numbers."""
        if not isinstance(other, CycNumber):
            return self * (1 / Fraction(other))
        return self * other.inverse()

    def __pow__(self, exponent: int) -> CycNumber:
        """Raise the number to an integer power."""
        if exponent < 0 and self.is_zero():
            raise ZeroDivisionError(str(self))
        return CycNumber.from_anp(self.root_order, self.to_anp() ** exponent)

    def __eq__(self, other: object) -> bool:
        """Return whether the numbers are equal, possibly after embedding both in a common field."""
        if isinstance(other, int | Fraction):
            return self.is_rational() and self.as_rational() == other
        if not isinstance(other, CycNumber):
            return NotImplemented
        left, right = self._common(other)
        return left.coefficients == right.coefficients and left.denominator == right.denominator

    def __hash__(self) -> int:
        """Return a hash that does not depend on the field the number is stored in."""
        # The normalized trace Tr(x)/[K:ℚ] is the same in every cyclotomic field containing x.
        return hash(self.trace() / self.degree)

    def __repr__(self) -> str:
        """Return a representation of the number."""
        terms = [f"{value}ζ^{k}" if k else str(value) for k, value in enumerate(self.coefficients) if value]
        numerator = " + ".join(terms) or "0"
        suffix = f" / {self.denominator}" if self.denominator != 1 else ""
        return f"({numerator}){suffix} in ℚ(ζ_{self.root_order})"
