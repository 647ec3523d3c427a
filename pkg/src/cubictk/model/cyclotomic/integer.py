"""Algebraic integers in ℤ[ζ_r] for an odd prime r."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cache

from sympy.ntheory import isprime

from cubictk.errors import InputError


def check_prime(r: int) -> None:
    """Raise an input error unless r is an odd prime."""
    if r < 3 or not isprime(r):
        message = f"r must be an odd prime, got {r}"
        raise InputError(message)


@cache
def evaluation_prime(r: int, bits: int) -> tuple[int, int]:
    """Return a prime q ≡ 1 mod r with q ≥ 2^bits and an element of order r in 𝔽_q."""
    k = (1 << bits) // r + 1
    while not isprime(k * r + 1):
        k += 1
    q = k * r + 1
    base = 2
    while (root := pow(base, (q - 1) // r, q)) == 1:
        base += 1
    return q, root


@dataclass(frozen=True)
class CycInt:
    """Element of ℤ[ζ_r] with coordinates in the basis 1, ζ, …, ζ^(r−2)."""

    r: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        """Check the number of coordinates."""
        if len(self.coeffs) != self.r - 1:
            message = f"an element of ℤ[ζ_{self.r}] has {self.r - 1} coordinates, got {len(self.coeffs)}"
            raise InputError(message)

    @classmethod
    def from_int(cls, r: int, value: int) -> CycInt:
        """Return the rational integer as element of ℤ[ζ_r]."""
        return cls(r, (value,) + (0,) * (r - 2))

    @classmethod
    def zeta(cls, r: int, power: int = 1) -> CycInt:
        """Return ζ_r^k."""
        cyclic = [0] * r
        cyclic[power % r] = 1
        return cls.from_cyclic(r, cyclic)

    @classmethod
    def from_cyclic(cls, r: int, values: Sequence[int]) -> CycInt:
        """Return Σ values[k]·ζ^k for 0 ≤ k < len(values), reducing exponents mod r."""
        cyclic = [0] * r
        for k, value in enumerate(values):
            cyclic[k % r] += value
        top = cyclic[r - 1]
        return cls(r, tuple(value - top for value in cyclic[: r - 1]))

    def cyclic(self) -> list[int]:
        """Return the coefficients of ζ^0, …, ζ^(r−1), the last one being zero."""
        return [*self.coeffs, 0]

    def is_zero(self) -> bool:
        """Return whether the element is zero."""
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        """Return whether the element lies in ℤ."""
        return not any(self.coeffs[1:])

    def __add__(self, other: CycInt | int) -> CycInt:
        """Add the elements."""
        other = self._coerce(other)
        return CycInt(self.r, tuple(a + b for a, b in zip(self.coeffs, other.coeffs, strict=True)))

    __radd__ = __add__

    def __neg__(self) -> CycInt:
        """Return the negated element."""
        return CycInt(self.r, tuple(-a for a in self.coeffs))

    def __sub__(self, other: CycInt | int) -> CycInt:
        """Subtract the elements."""
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> CycInt:
        """Subtract this element from an integer."""
        return -self + other

    def __mul__(self, other: CycInt | int) -> CycInt:
        """Multiply the elements."""
        if isinstance(other, int):
            return CycInt(self.r, tuple(a * other for a in self.coeffs))
        r = self.r
        cyclic = [0] * r
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        cyclic[(i + j) % r] += a * b
        return CycInt.from_cyclic(r, cyclic)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> CycInt:
        """Raise the element to a non-negative power."""
        if exponent < 0:
            message = f"ℤ[ζ_{self.r}] is not closed under negative powers"
            raise InputError(message)
        result, base = CycInt.from_int(self.r, 1), self
        while exponent:
            if exponent & 1:
                result *= base
            exponent >>= 1
            if exponent:
                base *= base
        return result

    def divide_exactly(self, n: int) -> CycInt:
        """Divide by a rational integer that divides every coordinate."""
        if not self.is_divisible_by(n):
            message = f"{self} is not divisible by {n}"
            raise InputError(message)
        return CycInt(self.r, tuple(a // n for a in self.coeffs))

    def is_divisible_by(self, n: int) -> bool:
        """Return whether the element lies in nℤ[ζ_r]."""
        return all(a % n == 0 for a in self.coeffs)

    def galois(self, a: int) -> CycInt:
        """Apply σ_a: ζ ↦ ζ^a."""
        if a % self.r == 0:
            message = f"σ_{a} is not an automorphism of ℚ(ζ_{self.r})"
            raise InputError(message)
        cyclic = [0] * self.r
        for k, value in enumerate(self.coeffs):
            cyclic[k * a % self.r] += value
        return CycInt.from_cyclic(self.r, cyclic)

    def t2(self) -> int:
        """Return Σ_σ |σ(x)|², the sum over all complex embeddings."""
        return self.r * sum(a * a for a in self.coeffs) - sum(self.coeffs) ** 2

    def evaluate(self, point: int, modulus: int) -> int:
        """Return the value of the coordinate polynomial at the point, modulo the modulus."""
        value = 0
        for coefficient in reversed(self.coeffs):
            value = (value * point + coefficient) % modulus
        return value

    def norm(self) -> int:
        """Return the norm to ℚ, which is non-negative because ℚ(ζ_r) is totally complex."""
        if self.is_zero():
            return 0
        half = (self.r - 1) // 2
        # Arithmetic and geometric mean of the |σ(x)|² bound the norm
        bound = -(-self.t2() ** half // (self.r - 1) ** half)
        q, root = evaluation_prime(self.r, bound.bit_length() + 1)
        result, point = 1, 1
        for _ in range(self.r - 1):
            point = point * root % q
            result = result * self.evaluate(point, q) % q
        return result

    def multiplication_rows(self) -> list[list[int]]:
        """Return the coordinates of x, xζ, …, xζ^(r−2), the ℤ-generators of the principal ideal (x)."""
        zeta = CycInt.zeta(self.r)
        rows, current = [], self
        for _ in range(self.r - 1):
            rows.append(list(current.coeffs))
            current *= zeta
        return rows

    def _coerce(self, other: CycInt | int) -> CycInt:
        """Return the other operand as element of the same ring."""
        if isinstance(other, int):
            return CycInt.from_int(self.r, other)
        if other.r != self.r:
            message = f"cannot combine elements of ℤ[ζ_{self.r}] and ℤ[ζ_{other.r}]"
            raise InputError(message)
        return other

    def __str__(self) -> str:
        """Return a readable form of the element."""
        terms = []
        for k, a in enumerate(self.coeffs):
            if a:
                power = "" if k == 0 else "ζ" if k == 1 else f"ζ^{k}"
                magnitude = "" if abs(a) == 1 and k else str(abs(a))
                terms.append(f"{'-' if a < 0 else '+'} {magnitude}{power}")
        text = " ".join(terms)
        return (text[2:] if text.startswith("+") else "-" + text[2:]) if terms else "0"
