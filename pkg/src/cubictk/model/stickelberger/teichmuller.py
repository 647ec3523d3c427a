"""Teichmüller lifts of residues mod r to (r − 1)-st roots of unity in ℤ_r."""

from __future__ import annotations

from dataclasses import dataclass, field

from cubictk.errors import InputError
from cubictk.model.cyclotomic.integer import check_prime


def teichmuller(r: int, a: int, k: int) -> int:
    """Return ω_r(a) mod r^k, the (r − 1)-st root of unity congruent to a mod r.

    Iterating x ↦ x^r converges to ω_r(a): a^(r^(k−1)) ≡ ω_r(a) mod r^k.
    """
    check_prime(r)
    if k < 1:
        message = f"the precision must be at least 1, got {k}"
        raise InputError(message)
    if a % r == 0:
        message = f"{a} is not a unit mod {r}"
        raise InputError(message)
    modulus = r**k
    x = a % modulus
    for _ in range(k - 1):
        x = pow(x, r, modulus)
    return x


@dataclass(frozen=True)
class TeichmullerLift:
    """The table a ↦ ω_r(a) mod r^k for a = 1, …, r − 1."""

    r: int
    precision: int
    table: dict[int, int] = field(compare=False, repr=False)

    @classmethod
    def build(cls, r: int, precision: int) -> TeichmullerLift:
        """Compute the table."""
        return cls(r, precision, {a: teichmuller(r, a, precision) for a in range(1, r)})

    @property
    def modulus(self) -> int:
        """Return r^k."""
        return self.r**self.precision

    def __getitem__(self, a: int) -> int:
        """Return ω_r(a) mod r^k."""
        if a % self.r == 0:
            message = f"{a} is not a unit mod {self.r}"
            raise InputError(message)
        return self.table[a % self.r]
