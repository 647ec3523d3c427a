"""Branch data of a tame G-cover of an arithmetic variety: the ramified fibral components and their inertia."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from cubictk.errors import IncompleteDataError, InputError, ShapeMismatchError
from cubictk.model.group.abelian import FiniteAbelianGroup, GCharacter, GroupElement
from cubictk.tools import lcm

Divisor = dict[str, int]  # Component name ↦ coefficient


def element_order(group: FiniteAbelianGroup, element: GroupElement) -> int:
    """Return the order of the group element."""
    if len(element) != group.rank:
        message = f"{list(element)} is not an element of {group}"
        raise ShapeMismatchError(message)
    return lcm(*(d // gcd(x, d) for x, d in zip(element, group.invariant_factors, strict=True)))


@dataclass(frozen=True)
class BranchComponent:
    """A codimension one fibral component y with inertia group I_y, cyclic of order e = #I_y.

    The cotangent character φ_y of I_y sends the generator h to ζ_e^u, u the inertia exponent. For a cyclic group
    the generator defaults to the element of order e generating the unique subgroup of that order. Instead of the
    generator, the map χ ↦ n(χ, y), keyed by character exponents, may be given.
    """

    name: str
    inertia_order: int = 1
    self_intersection: int = 0
    euler_char: int = 0
    inertia_exponent: int = 1
    inertia_generator: GroupElement | None = None
    inertia_map: Mapping[tuple[int, ...], int] | None = field(default=None, compare=False)
    prime: int | None = None  # Residue characteristic of the fiber
    multiplicity: int = 1  # Multiplicity in the fiber

    def check(self, group: FiniteAbelianGroup) -> None:
        """Check the inertia data against the group."""
        e = self.inertia_order
        if e < 1 or group.order % e:
            message = f"the inertia order {e} of {self.name} does not divide #G = {group.order}"
            raise InputError(message)
        if gcd(self.inertia_exponent, e) != 1:
            message = f"the inertia exponent {self.inertia_exponent} of {self.name} is not a unit mod {e}"
            raise InputError(message)
        if self.multiplicity < 1:
            message = f"the multiplicity of {self.name} must be positive, got {self.multiplicity}"
            raise InputError(message)
        if self.inertia_map is not None:
            if any(not 0 <= n < e for n in self.inertia_map.values()):
                message = f"the inertia map of {self.name} has values outside 0, …, {e - 1}"
                raise InputError(message)
            if self.inertia_map.get(group.trivial_character.exponents, 0):
                message = f"the inertia map of {self.name} is nonzero on the trivial character"
                raise InputError(message)
        elif e > 1 and element_order(group, self.generator(group)) != e:
            message = f"the inertia generator of {self.name} does not have order {e}"
            raise InputError(message)

    def generator(self, group: FiniteAbelianGroup) -> GroupElement:
        """Return the generator h of the inertia group."""
        if self.inertia_generator is not None:
            return tuple(self.inertia_generator)
        if group.rank != 1:
            message = f"{self.name} needs an explicit inertia generator because {group} is not cyclic"
            raise IncompleteDataError(message)
        return (group.order // self.inertia_order,)

    def n_value(self, chi: GCharacter) -> int:
        """Return the n(χ, y) in 0, …, e − 1 with χ|_(I_y) = φ_y^n."""
        e = self.inertia_order
        if e == 1:
            return 0
        if self.inertia_map is not None:
            if chi.exponents not in self.inertia_map:
                message = f"the inertia map of {self.name} has no value at {chi}"
                raise IncompleteDataError(message)
            return self.inertia_map[chi.exponents]
        # h has order e, so χ(h) = ζ_E^k is a power of ζ_e = ζ_E^(E/e)
        k = chi.pairing(self.generator(chi.group)) // (chi.group.exponent // e)
        return k * pow(self.inertia_exponent, -1, e) % e


def g_value(component: BranchComponent, chi: GCharacter) -> Fraction:
    """Return g(χ, y) = −n(χ, y)/#I_y, a rational in (−1, 0]."""
    return Fraction(-component.n_value(chi), component.inertia_order)


@dataclass(frozen=True)
class BranchData:
    """The ramified fibral components of a tame cover of a (d + 1)-dimensional regular Y, with intersection numbers.

    Cross intersections y_i·y_j are keyed by index pairs; self intersections live on the components. With complete
    fibers, the components above each prime must form whole fibers, so that Σ_j m_j (y_i·y_j) = 0.
    """

    group: FiniteAbelianGroup
    components: tuple[BranchComponent, ...]
    cross_intersections: Mapping[tuple[int, int], int] = field(default_factory=dict, compare=False)
    dimension: int = 1
    complete_fibers: bool = False

    def __post_init__(self) -> None:
        """Check the components and the intersection numbers."""
        object.__setattr__(self, "components", tuple(self.components))
        if self.dimension < 1:
            message = f"the relative dimension must be positive, got {self.dimension}"
            raise InputError(message)
        names = [component.name for component in self.components]
        if len(set(names)) != len(names):
            message = f"component names must be unique: {names}"
            raise InputError(message)
        for component in self.components:
            component.check(self.group)
        symmetric: dict[tuple[int, int], int] = {}
        for (i, j), value in self.cross_intersections.items():
            if i == j or not (0 <= i < len(self.components) and 0 <= j < len(self.components)):
                message = f"invalid intersection index pair ({i}, {j})"
                raise ShapeMismatchError(message)
            if symmetric.setdefault((min(i, j), max(i, j)), value) != value:
                message = f"the intersection matrix is not symmetric at ({i}, {j})"
                raise InputError(message)
        object.__setattr__(self, "cross_intersections", symmetric)
        if self.complete_fibers:
            self.check_fibers()

    def intersection(self, i: int, j: int) -> int:
        """Return y_i·y_j."""
        if i == j:
            return self.components[i].self_intersection
        return self.cross_intersections.get((min(i, j), max(i, j)), 0)

    def check_fibers(self) -> None:
        """Check that Σ_j m_j (y_i·y_j) = 0 over the components of the fiber of y_i."""
        for i, component in enumerate(self.components):
            total = sum(
                other.multiplicity * self.intersection(i, j)
                for j, other in enumerate(self.components)
                if other.prime == component.prime
            )
            if total:
                message = f"{component.name} meets its fiber with degree {total} instead of 0"
                raise InputError(message)

    @property
    def primes(self) -> list[int]:
        """Return the residue primes of the components."""
        if any(component.prime is None for component in self.components):
            message = "every component needs its residue prime"
            raise IncompleteDataError(message)
        return sorted({component.prime for component in self.components if component.prime is not None})

    def ramified(self, chi: GCharacter, prime: int | None = None) -> list[tuple[int, Fraction]]:
        """Return the indices and g-values of the components, above the prime if given, where g(χ, y) ≠ 0."""
        values = (
            (i, g_value(component, chi))
            for i, component in enumerate(self.components)
            if prime is None or component.prime == prime
        )
        return [(i, value) for i, value in values if value]


def f_divisor(branch_data: BranchData, chi: GCharacter) -> Divisor:
    """Return F(χ) = Σ_y #G·g(χ, y)·y, an integral divisor supported on the ramified components."""
    order = branch_data.group.order
    return {branch_data.components[i].name: int(order * value) for i, value in branch_data.ramified(chi)}
