"""Eigenspaces of the Galois action on the ℓ-part of a cyclotomic class group."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product
from math import gcd, prod

from sympy import factorint, primitive_root

from cubictk.errors import BudgetExhaustedError, HypothesisError, InputError
from cubictk.model.cyclotomic.class_group import ClassGroup, IdealClass
from cubictk.model.group.dirichlet import discrete_logarithms

from .stickelberger import StickelbergerElt, primary_component
from .teichmuller import teichmuller

DEFAULT_MAX_ELEMENTS = 100_000

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class EigenComponent:
    """The classes c with σ_a(c) = ω^j(a)·c for all a, and the scalar by which a Stickelberger element acts."""

    j: int
    eigenvalue: int  # The scalar by which σ_g acts, g the least primitive root mod r
    generators: tuple[IdealClass, ...]
    order: int
    exponent: int
    theta_scalar: int | None = None


@dataclass(frozen=True)
class EigenDecomp:
    """The nonzero eigenspaces C_j of the ℓ-part of a class group."""

    prime: int
    order: int  # Order of the ℓ-part
    components: tuple[EigenComponent, ...]

    @property
    def complete(self) -> bool:
        """Return whether the eigenspaces span the ℓ-part; they may not when ℓ ∤ r − 1 or ℓ = 2."""
        return prod(component.order for component in self.components) == self.order

    def component(self, j: int) -> EigenComponent | None:
        """Return C_j if it is nonzero."""
        return next((component for component in self.components if component.j == j), None)


def roots_of_unity(r: int, prime: int, precision: int) -> dict[int, int]:
    """Return λ ↦ j for the (r − 1)-st roots of unity λ in ℤ/ℓ^k, where λ is the image of ω_r(g)^j.

    The roots of unity of ℤ_ℓ of order dividing r − 1 form a cyclic group of order d = gcd(r − 1, ℓ − 1), or
    {±1} for ℓ = 2. Its generator η is the Teichmüller lift of the least primitive root mod ℓ raised to the
    power (ℓ − 1)/d, and η^t corresponds to j = t·(r − 1)/d.
    """
    modulus = prime**precision
    if prime == 2:
        order, generator = 2, modulus - 1
    else:
        order = gcd(r - 1, prime - 1)
        generator = pow(teichmuller(prime, int(primitive_root(prime)), precision), (prime - 1) // order, modulus)
    roots: dict[int, int] = {}
    for t in range(order):
        roots.setdefault(pow(generator, t, modulus), t * (r - 1) // order)
    return roots


def _enumerate(invariants: tuple[int, ...], generators: list[IdealClass], zero: IdealClass) -> list[IdealClass]:
    """Return all elements of the subgroup generated by the classes of the given orders."""
    elements = []
    for multiples in product(*(range(order) for order in invariants)):
        element = zero
        for multiple, generator in zip(multiples, generators, strict=True):
            element += generator * multiple
        elements.append(element)
    return elements


def _span(elements: list[IdealClass], zero: IdealClass) -> tuple[tuple[IdealClass, ...], set[IdealClass]]:
    """Return generators of the subgroup formed by the elements, greedily by decreasing order, and the subgroup."""
    chosen: list[IdealClass] = []
    subgroup = {zero}
    for element in sorted(elements, key=lambda element: (-element.order(), element.coordinates)):
        if element not in subgroup:
            chosen.append(element)
            subgroup = {member + element * k for member in subgroup for k in range(element.order())}
    return tuple(chosen), subgroup


def eigen_decompose(
    group: ClassGroup, prime: int, theta: StickelbergerElt | None = None, *, max_elements: int = DEFAULT_MAX_ELEMENTS
) -> EigenDecomp:
    """Split the ℓ-part of the class group into the eigenspaces of the action of (ℤ/r)^*.

    Because (ℤ/r)^* is cyclic, the simultaneous eigenspaces are the eigenspaces of σ_g for the least primitive
    root g. They are found by enumerating the ℓ-part, so its order is bounded by max_elements.
    """
    if group.is_trivial():
        return EigenDecomp(prime, 1, ())
    exponent = group.exponent
    valuation = factorint(exponent).get(prime, 0)
    if not valuation:
        message = f"{prime} does not divide the order {group.order} of {group}"
        raise HypothesisError(message)
    r = group.r
    if theta is not None and theta.r != r:
        message = f"the Stickelberger element is for r = {theta.r}, the class group for r = {r}"
        raise InputError(message)
    zero = group.zero()
    parts = [primary_component(generator, exponent, prime) for generator in group.generators()]
    orders = tuple(part.order() for part in parts)
    if prod(orders) > max_elements:
        message = f"the {prime}-part has more than {max_elements} elements"
        raise BudgetExhaustedError(message)
    elements = _enumerate(orders, parts, zero)
    g = int(primitive_root(r))
    images = {element: group.galois_action(g, element) for element in elements}
    components = []
    for eigenvalue, j in sorted(roots_of_unity(r, prime, valuation).items(), key=lambda item: item[1]):
        kernel = [element for element in elements if images[element] == element * eigenvalue]
        generators, subgroup = _span(kernel, zero)
        if not generators:
            continue
        component_exponent = max(generator.order() for generator in generators)
        scalar = None
        if theta is not None:
            scalar = _theta_scalar(theta, eigenvalue, prime, valuation) % component_exponent
        component = EigenComponent(j, eigenvalue, generators, len(subgroup), component_exponent, scalar)
        components.append(component)
        LOGGER.debug("C_%d of order %d in the %d-part of %s", j, len(subgroup), prime, group)
    return EigenDecomp(prime, prod(orders), tuple(components))


def _theta_scalar(theta: StickelbergerElt, eigenvalue: int, prime: int, precision: int) -> int:
    """Return Σ_a c(a)·λ^(−log_g a), the scalar by which θ acts where σ_g acts as λ."""
    modulus = prime**precision
    logarithms = discrete_logarithms(theta.r)
    inverse = pow(eigenvalue, -1, modulus)
    coefficients = theta.coefficients(prime, precision)
    total = sum(coefficient * pow(inverse, logarithms[a], modulus) for a, coefficient in coefficients.items())
    return total % modulus
