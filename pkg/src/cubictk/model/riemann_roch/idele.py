"""The finite idèle that presents Θ of the equivariant Euler characteristic of a tame cover."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from cubictk.errors import HypothesisError
from cubictk.model.cubic.idele import IdeleElt, valuation_idele
from cubictk.model.group.abelian import CharacterTuple, GroupPower, power_character

from .branch import BranchData
from .localized import DegreeTable, t_pi_function

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class ThetaIdele:
    """Per residue prime v, the exponent of ϖ_v in φ(λ_v) for every character φ of G^(d+2); 0 away from S_K."""

    power: GroupPower
    exponents: dict[int, dict[CharacterTuple, Fraction]] = field(compare=False)
    factor: int = 2  # The c in φ(λ_v) = ϖ_v^(−c·T_v(Θ^D(φ)))

    @property
    def places(self) -> list[int]:
        """Return the residue primes in S_K."""
        return sorted(self.exponents)

    def exponent(self, place: int, phi: CharacterTuple) -> Fraction:
        """Return the exponent at the place and the character."""
        self.power.check_character(phi)
        return self.exponents.get(place, {}).get(phi, Fraction(0))

    def orbit_defect(self) -> tuple[int, CharacterTuple] | None:
        """Return a place v and a character φ with exponent(φ^v) ≠ exponent(φ), or None.

        Frobenius at v raises the values of the characters to the power v, so the exponents at v must be constant on
        the orbits of φ ↦ φ^v.
        """
        for place, values in sorted(self.exponents.items()):
            for phi, value in values.items():
                if values.get(power_character(phi, place), Fraction(0)) != value:
                    return place, phi
        return None

    def as_idele(self) -> IdeleElt:
        """Return the idèle with unit parts 1 and these valuations."""
        return valuation_idele(self.power, self.exponents)


def main_theorem_idele(
    branch_data: BranchData,
    table: DegreeTable | None = None,
    *,
    squared: bool = False,
    euler_characteristic: int | None = None,
) -> ThetaIdele:
    """Return the idèle with φ(λ_v) = ϖ_v^(−c·T_(v,𝒢)(Θ^D(φ))) at the primes v of the branch data.

    The squared form, c = 2, presents Θ(2·χ̄(X, 𝓕)) and always holds. With squared false, c = 1 presents
    Θ(χ̄(X, 𝓕)), which needs the usual Euler characteristic χ(Y, 𝒢) to be even; it is checked when given.
    """
    if not squared and euler_characteristic is not None and euler_characteristic % 2:
        message = f"the unsquared form needs an even Euler characteristic, got {euler_characteristic}"
        raise HypothesisError(message)
    group = branch_data.group
    for prime in branch_data.primes:
        if group.order % prime == 0:
            message = f"the residue characteristic {prime} divides #G = {group.order}"
            raise HypothesisError(message)
    factor = 2 if squared else 1
    power = group.power(branch_data.dimension + 2)
    exponents = {}
    for prime in branch_data.primes:
        function = t_pi_function(branch_data, table, prime)
        exponents[prime] = {phi: -factor * function.on_theta(phi) for phi in power.characters()}
        LOGGER.info("computed the exponents of λ_%d on %d characters", prime, len(exponents[prime]))
    return ThetaIdele(power, exponents, factor)
