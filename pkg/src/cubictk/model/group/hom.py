"""Homomorphisms between powers of a group and their formal integer combinations."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import permutations

from cubictk.errors import InputError, ShapeMismatchError
from cubictk.tools import subsets

from .abelian import CharacterTuple, FiniteAbelianGroup, GCharacter, GroupElement, GroupPower
from .virtual import VirtualCharacter


@dataclass(frozen=True, order=True)
class GroupHom:
    """Homomorphism G^r → H^s, given by the images of the generators of G^r."""

    source: GroupPower
    target: GroupPower
    images: tuple[GroupElement, ...]

    def __post_init__(self) -> None:
        """Reduce the images and check that the homomorphism is well defined."""
        if len(self.images) != len(self.source.orders):
            message = f"a hom from {self.source} needs {len(self.source.orders)} generator images"
            raise ShapeMismatchError(message)
        images = tuple(self.target.reduce(tuple(image)) for image in self.images)
        object.__setattr__(self, "images", images)
        for order, image in zip(self.source.orders, images, strict=True):
            if any(value for value in self.target.reduce(tuple(order * value for value in image))):
                message = f"image {list(image)} of a generator of order {order} has an order not dividing {order}"
                raise InputError(message)

    @classmethod
    def from_blocks(cls, group: FiniteAbelianGroup, r: int, s: int, blocks: Sequence[Sequence[int]]) -> GroupHom:
        """Return the hom G^r → G^s sending copy a to Σ_b blocks[a][b]·(copy b)."""
        rank = group.rank
        images = []
        for a in range(r):
            for i in range(rank):
                image = [0] * (rank * s)
                for b in range(s):
                    image[b * rank + i] = blocks[a][b]
                images.append(tuple(image))
        return cls(group.power(r), group.power(s), tuple(images))

    @classmethod
    def identity(cls, power: GroupPower) -> GroupHom:
        """Return the identity of G^n."""
        size = len(power.orders)
        return cls(power, power, tuple(tuple(int(i == j) for j in range(size)) for i in range(size)))

    def __call__(self, element: GroupElement) -> GroupElement:
        """Return the image of the element."""
        result = [0] * len(self.target.orders)
        for coefficient, image in zip(element, self.images, strict=True):
            for index, value in enumerate(image):
                result[index] += coefficient * value
        return self.target.reduce(tuple(result))

    def compose(self, inner: GroupHom) -> GroupHom:
        """Return self ∘ inner."""
        if inner.target != self.source:
            message = f"cannot compose a hom from {self.source} with a hom into {inner.target}"
            raise ShapeMismatchError(message)
        return GroupHom(inner.source, self.target, tuple(self(image) for image in inner.images))

    def power(self, n: int) -> GroupHom:
        """Return the hom G^(rn) → H^(sn) acting copy-wise, for a hom G^r → H^s."""
        target_size = len(self.target.orders)
        images = []
        for copy in range(n):
            for image in self.images:
                flat = [0] * (target_size * n)
                flat[copy * target_size : (copy + 1) * target_size] = image
                images.append(tuple(flat))
        source = GroupPower(self.source.group, self.source.n * n)
        target = GroupPower(self.target.group, self.target.n * n)
        return GroupHom(source, target, tuple(images))

    def pull_back(self, character: CharacterTuple) -> CharacterTuple:
        """Return the character φ ∘ 𝓘 of the source for a character φ of the target."""
        self.target.check_character(character)
        group = self.source.group
        target_exponent = self.target.group.exponent
        exponents = []
        for order, image in zip(self.source.orders, self.images, strict=True):
            pairing = self.target.pairing(character, image) if self.target.n else 0
            exponents.append(pairing * order // target_exponent % order)
        rank = group.rank
        return tuple(
            GCharacter(group, tuple(exponents[copy * rank : (copy + 1) * rank])) for copy in range(self.source.n)
        )


@dataclass(frozen=True)
class SigmaElt:
    """Formal ℤ-combination of homs G^r → G^s."""

    source: GroupPower
    target: GroupPower
    terms: tuple[tuple[GroupHom, int], ...] = ()

    def __post_init__(self) -> None:
        """Collect equal homs, drop zero multiplicities and check the shapes."""
        counter: Counter[GroupHom] = Counter()
        for hom, multiplicity in self.terms:
            if hom.source != self.source or hom.target != self.target:
                message = f"hom {hom.source} → {hom.target} does not fit in Σ({self.source}, {self.target})"
                raise ShapeMismatchError(message)
            counter[hom] += multiplicity
        object.__setattr__(self, "terms", tuple(sorted((hom, value) for hom, value in counter.items() if value)))

    @classmethod
    def of(cls, *terms: tuple[GroupHom, int]) -> SigmaElt:
        """Return the combination of the (non-empty) terms."""
        return cls(terms[0][0].source, terms[0][0].target, terms)

    def is_zero(self) -> bool:
        """Return whether the combination is zero."""
        return not self.terms

    def __add__(self, other: SigmaElt) -> SigmaElt:
        """Add the combinations."""
        if (other.source, other.target) != (self.source, self.target):
            message = "cannot add elements of different Σ(r, s)"
            raise ShapeMismatchError(message)
        return SigmaElt(self.source, self.target, self.terms + other.terms)

    def __neg__(self) -> SigmaElt:
        """Negate the combination."""
        return SigmaElt(self.source, self.target, tuple((hom, -value) for hom, value in self.terms))

    def __sub__(self, other: SigmaElt) -> SigmaElt:
        """Subtract the combinations."""
        return self + (-other)

    def __rmul__(self, scalar: int) -> SigmaElt:
        """Multiply by an integer."""
        return SigmaElt(self.source, self.target, tuple((hom, scalar * value) for hom, value in self.terms))

    def __mul__(self, other: SigmaElt) -> SigmaElt:
        """Return z′·z = Σ z′(𝓘′)z(𝓘)[𝓘′ ∘ 𝓘] for z′ = self; zero when the shapes do not fit."""
        if other.target != self.source:
            return SigmaElt(other.source, self.target)
        return SigmaElt(
            other.source,
            self.target,
            tuple(
                (outer.compose(inner), outer_value * inner_value)
                for outer, outer_value in self.terms
                for inner, inner_value in other.terms
            ),
        )

    def pull_back(self, character: CharacterTuple) -> VirtualCharacter:
        """Return Σ z(𝓘)·(φ ∘ 𝓘), a virtual character of the source."""
        self.target.check_character(character)
        terms = ((hom.pull_back(character), value) for hom, value in self.terms)
        return VirtualCharacter.from_terms(self.source, terms)


def pullback_character(z: SigmaElt, phi: CharacterTuple) -> VirtualCharacter:
    """Return the virtual character Δ_z^D(φ) of G^r for a character φ of G^s."""
    return z.pull_back(phi)


def subset_hom(group: FiniteAbelianGroup, n: int, subset: Iterable[int]) -> GroupHom:
    """Return the hom G → G^n, g ↦ (gᵢ) with gᵢ = g for i in the subset and the identity elsewhere."""
    indices = set(subset)
    return GroupHom.from_blocks(group, 1, n, [[int(index in indices) for index in range(n)]])


def augmentation_element(group: FiniteAbelianGroup, n: int) -> SigmaElt:
    """Return s_n = Σ_I (−1)^(n−#I)·I over all subsets I of {0, …, n−1}."""
    return SigmaElt(
        group.power(1),
        group.power(n),
        tuple((subset_hom(group, n, subset), (-1) ** (n - len(subset))) for subset in subsets(range(n))),
    )


def permutation_hom(group: FiniteAbelianGroup, permutation: Sequence[int]) -> GroupHom:
    """Return 𝓘_σ: G^n → G^n with φ ∘ 𝓘_σ = (φ_σ(0), …, φ_σ(n−1))."""
    n = len(permutation)
    return GroupHom.from_blocks(group, n, n, [[int(permutation[a] == b) for b in range(n)] for a in range(n)])


def symmetry_element(group: FiniteAbelianGroup, permutation: Sequence[int]) -> SigmaElt:
    """Return z_σ = 𝓘_σ − 𝓘_id."""
    n = len(permutation)
    return SigmaElt.of((permutation_hom(group, permutation), 1), (GroupHom.identity(group.power(n)), -1))


def adjacent_transpositions(n: int) -> list[tuple[int, ...]]:
    """Return the transpositions (i i+1), which generate the symmetric group."""
    result = []
    for i in range(n - 1):
        permutation = list(range(n))
        permutation[i], permutation[i + 1] = i + 1, i
        result.append(tuple(permutation))
    return result


def all_permutations(n: int) -> list[tuple[int, ...]]:
    """Return all non-identity permutations of n items."""
    return [permutation for permutation in permutations(range(n)) if list(permutation) != list(range(n))]


def cocycle_element(group: FiniteAbelianGroup, n: int) -> SigmaElt:
    """Return the element of Σ(n, n+1) whose pull-backs give the four terms of the cocycle condition."""
    if n < 2:
        message = f"the cocycle condition needs n ≥ 2, got {n}"
        raise InputError(message)

    def shifted(a: int) -> list[int]:
        """Send copy a to copy a + 1."""
        return [int(b == a + 1) for b in range(n + 1)]

    def first_two_fixed(extra: int | None) -> list[list[int]]:
        """Keep copies 0 and 1 in place, send copy 1 also to copy 2 if extra, shift the rest by one."""
        rows = [[int(b == 0) for b in range(n + 1)], [int(b == 1 or b == extra) for b in range(n + 1)]]
        return rows + [shifted(a) for a in range(2, n)]

    first_doubled = [[int(b in (0, 1)) for b in range(n + 1)]] + [shifted(a) for a in range(1, n)]
    first_dropped = [shifted(a) for a in range(n)]
    return SigmaElt.of(
        (GroupHom.from_blocks(group, n, n + 1, first_doubled), 1),
        (GroupHom.from_blocks(group, n, n + 1, first_dropped), -1),
        (GroupHom.from_blocks(group, n, n + 1, first_two_fixed(None)), 1),
        (GroupHom.from_blocks(group, n, n + 1, first_two_fixed(2)), -1),
    )


def rigidity_element(group: FiniteAbelianGroup, n: int) -> SigmaElt:
    """Return the hom e: G^n → G^0 as element of Σ(n, 0)."""
    source = group.power(n)
    trivial = GroupHom(source, group.power(0), tuple(() for _ in source.orders))
    return SigmaElt.of((trivial, 1))
