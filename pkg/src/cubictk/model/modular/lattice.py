"""The Steinitz class of the lattice of weight 2 cusp forms with Nebentypus χ, and the class relation it satisfies."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from sympy import factorint, primitive_root

from cubictk.errors import CertificateMismatchError, ShapeMismatchError
from cubictk.model.cyclotomic.class_group import ClassGroup, IdealClass, class_group
from cubictk.model.cyclotomic.pchi import p_chi
from cubictk.model.group.dirichlet import DirichletCharacter
from cubictk.model.stickelberger.eigen import eigen_decompose
from cubictk.model.stickelberger.stickelberger import (
    StickelbergerElt,
    apply_stickelberger,
    primary_component,
    theta2_build,
)

from .cover import modular_cover

PLUS_CLASS_NUMBER_ASSUMPTION = "h⁺(ℚ(ζ_r)) = 1"

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class LatticeClassResult:
    """S₂(Γ₁(p), ℤ[ζ_r])_χ ≅ ℤ[ζ_r]^(n − 1) ⊕ 𝔄, with [𝔄] = θ₂·[P_χ] in Cl(ℤ[ζ_r])."""

    p: int
    r: int
    n_chi: int
    ideal_class: IdealClass  # For the character χ with χ(g) = ζ_r, g the least primitive root mod p
    characters: tuple[int, ...]  # The exponents e of the characters χ(g) = ζ_r^e evaluated
    values: dict[int, IdealClass] = field(compare=False)
    eigen_path_agrees: bool | None = None  # None when the eigenspaces do not split the class group
    assumptions: tuple[str, ...] = ()  # Class groups are certified against h⁻, assuming h⁺ = 1

    @property
    def is_free(self) -> bool:
        """Return whether the lattice is free over ℤ[ζ_r]."""
        return self.ideal_class.is_zero()


def lattice_class(theta: StickelbergerElt, character: DirichletCharacter, group: ClassGroup) -> IdealClass:
    """Return θ₂·[P_χ] in the class group."""
    prime = p_chi(group.r, character.modulus, character)
    return apply_stickelberger(theta, group.class_of(prime), group)


def eigen_path(theta: StickelbergerElt, ideal_class: IdealClass, group: ClassGroup) -> IdealClass | None:
    """Return θ·c computed as Σ_j s_j·e_j(c), with s_j the scalar by which θ acts on the eigenspace C_j.

    The idempotent e_j = (r − 1)^(−1)·Σ_t λ_j^(−t)·σ_g^t needs ℓ ∤ r − 1 for every ℓ dividing the
    class number. Otherwise, or when the eigenspaces do not span the ℓ-part, None is returned.
    """
    r, exponent = group.r, group.exponent
    g = int(primitive_root(r))
    result = group.zero()
    for prime, valuation in sorted(factorint(exponent).items()):
        decomposition = eigen_decompose(group, prime, theta)
        if (r - 1) % prime == 0 or not decomposition.complete:
            return None
        modulus = prime**valuation
        component = primary_component(ideal_class, exponent, prime)
        conjugates = [group.galois_action(pow(g, t, r), component) for t in range(r - 1)]
        for eigenspace in decomposition.components:
            inverse = pow(eigenspace.eigenvalue, -1, modulus)
            projection = group.zero()
            for t, conjugate in enumerate(conjugates):
                projection += conjugate * pow(inverse, t, modulus)
            projection *= pow(r - 1, -1, modulus)
            result += projection * (eigenspace.theta_scalar or 0)
    return result


def lattice_steinitz_class(
    p: int,
    r: int,
    *,
    group: ClassGroup | None = None,
    exponents: tuple[int, ...] | None = None,
    precision: int = 3,
) -> LatticeClassResult:
    """Return the rank and the Steinitz class of the χ-part of the lattice of weight 2 cusp forms on Γ₁(p).

    The class θ₂·[P_χ] is evaluated for the characters χ(g) = ζ_r^e of order r, by default for all of them; being
    Galois conjugate, the classes must be trivial for all characters or for none.
    """
    cover = modular_cover(p, r)
    theta = theta2_build(r, p, precision=precision)
    group = group or class_group(r)
    exponents = exponents or tuple(range(1, r))
    values, agreements = {}, set()
    for exponent in exponents:
        prime_class = group.class_of(p_chi(r, p, DirichletCharacter(p, r, exponent)))
        values[exponent] = apply_stickelberger(theta, prime_class, group)
        if (second := eigen_path(theta, prime_class, group)) is not None:
            agreements.add(second == values[exponent])
        LOGGER.info("θ₂·[P_χ] = %s for χ(g) = ζ_%d^%d", values[exponent].coordinates, r, exponent)
    if len({value.is_zero() for value in values.values()}) > 1:
        message = f"θ₂·[P_χ] is trivial for some but not all characters of order {r} mod {p}"
        raise CertificateMismatchError(message)
    if False in agreements:
        message = "the action of θ₂ on [P_χ] differs from its action through the eigenspaces"
        raise CertificateMismatchError(message)
    return LatticeClassResult(
        p,
        r,
        cover.genus - 1,
        values[exponents[0]],
        exponents,
        values,
        True if agreements else None,
        (PLUS_CLASS_NUMBER_ASSUMPTION,),
    )


def bsd_holds(lattice: IdealClass, sha: IdealClass, mordell_weil: IdealClass, group: ClassGroup) -> bool:
    """Return whether conj(θ₂·[P_χ]) = s(Ш) − conj(s(MW)) − s(MW) in the class group."""
    for name, ideal_class in (("θ₂·[P_χ]", lattice), ("Sha", sha), ("Mordell-Weil", mordell_weil)):
        if ideal_class.invariants != group.invariants:
            message = f"the {name} class does not belong to {group}"
            raise ShapeMismatchError(message)
    left = group.conjugate(lattice)
    right = sha - group.conjugate(mordell_weil) - mordell_weil
    LOGGER.debug("conj(θ₂·[P_χ]) = %s, s(Ш) − conj(s(MW)) − s(MW) = %s", left.coordinates, right.coordinates)
    return left == right


def bsd_relation(
    p: int,
    r: int,
    sha: IdealClass,
    mordell_weil: IdealClass,
    *,
    group: ClassGroup | None = None,
    exponent: int = 1,
    precision: int = 3,
) -> bool:
    """Check classes of Ш and of the Mordell-Weil group of J_H against θ₂·[P_χ] in Cl(ℤ[ζ_r, 1/2])."""
    modular_cover(p, r)
    group = group or class_group(r, invert_two=True)
    theta = theta2_build(r, p, precision=precision)
    return bsd_holds(lattice_class(theta, DirichletCharacter(p, r, exponent), group), sha, mordell_weil, group)
