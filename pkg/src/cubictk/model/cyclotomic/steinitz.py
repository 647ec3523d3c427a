"""Lattices with an action of a cyclic group of prime order, their χ-parts and Steinitz classes."""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import cast

from sympy import Matrix, eye, ilcm, zeros
from sympy.matrices.normalforms import smith_normal_decomp
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from cubictk.errors import InputError, ShapeMismatchError

from .class_group import ClassGroup, IdealClass
from .ideal import CycIdeal
from .integer import CycInt, check_prime

GroupRingElement = tuple[int, ...]  # Coefficients of 1, g, …, g^(r−1)

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class GLattice:
    """ℤ^rank with the generator g of G = ℤ/r acting on column vectors by an integer matrix."""

    r: int
    action: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        """Check that the matrix is square and that g^r = 1."""
        check_prime(self.r)
        if any(len(row) != len(self.action) for row in self.action):
            message = "the action of g must be given by a square matrix"
            raise ShapeMismatchError(message)
        if self.action and self.matrix() ** self.r != eye(self.rank):
            message = f"the matrix of g does not satisfy g^{self.r} = 1"
            raise InputError(message)

    @classmethod
    def from_matrix(cls, r: int, matrix: Matrix) -> GLattice:
        """Return the lattice on which g acts by the matrix."""
        return cls(r, tuple(tuple(int(value) for value in matrix.row(i)) for i in range(matrix.rows)))

    @classmethod
    def regular(cls, r: int) -> GLattice:
        """Return ℤ[G] with g permuting the basis 1, g, …, g^(r−1) cyclically."""
        return cls(r, tuple(tuple(int(i == (j + 1) % r) for j in range(r)) for i in range(r)))

    @classmethod
    def trivial(cls, r: int, rank: int = 1) -> GLattice:
        """Return ℤ^rank with trivial action."""
        return cls(r, tuple(tuple(int(i == j) for j in range(rank)) for i in range(rank)))

    @classmethod
    def from_ideal(cls, ideal: CycIdeal, power: int = 1) -> GLattice:
        """Return the ideal on its HNF basis, with g acting as multiplication by ζ^power."""
        zeta = CycInt.zeta(ideal.r, power)
        columns = [cast(tuple[int, ...], ideal.coordinates(element * zeta)) for element in ideal.elements()]
        return cls(ideal.r, tuple(zip(*columns, strict=True)))

    @property
    def rank(self) -> int:
        """Return the ℤ-rank."""
        return len(self.action)

    def matrix(self) -> Matrix:
        """Return the matrix of g."""
        return Matrix(self.rank, self.rank, [value for row in self.action for value in row])

    def direct_sum(self, other: GLattice) -> GLattice:
        """Return the direct sum of the lattices."""
        if other.r != self.r:
            message = f"lattices for groups of orders {self.r} and {other.r}"
            raise ShapeMismatchError(message)
        return GLattice.from_matrix(self.r, Matrix.diag(self.matrix(), other.matrix()))

    def dual(self) -> GLattice:
        """Return Hom(M, ℤ) on the dual basis, with g acting by f ↦ f ∘ g^(−1)."""
        return GLattice.from_matrix(self.r, (self.matrix() ** (self.r - 1)).T)


@dataclass(frozen=True)
class SteinitzClass:
    """A projective ℤ[ζ_r]-module ℤ[ζ_r]^(rank−1) ⊕ 𝔘, given by its rank and the class of 𝔘."""

    rank: int
    ideal_class: IdealClass


def cyclotomic_part(lattice: GLattice) -> Matrix:
    """Return the action of g on the largest torsion-free quotient of M on which Φ_r(g) vanishes."""
    action = lattice.matrix()
    phi = zeros(lattice.rank, lattice.rank)
    power = eye(lattice.rank)
    for _ in range(lattice.r):
        phi += power
        power *= action
    if phi.is_zero_matrix:
        return action
    diagonal, s, _ = smith_normal_decomp(phi)
    quotient = [i for i in range(lattice.rank) if diagonal[i, i] == 0]
    projection = s.extract(quotient, list(range(lattice.rank)))
    section = s.inv().extract(list(range(lattice.rank)), quotient)
    return projection * action * section


def _left_kernel(rows: list[list[int]], columns: slice) -> list[list[int]]:
    """Return a ℤ-basis of the combinations of the rows that vanish on the columns."""
    block = Matrix([row[columns] for row in rows])
    diagonal, s, _ = smith_normal_decomp(block)
    rank = sum(1 for i in range(min(block.shape)) if diagonal[i, i] != 0)
    kernel = s[rank:, :] * Matrix(rows)
    return [[int(value) for value in kernel.row(i)] for i in range(kernel.rows)]


def _independent_generators(r: int, action: Matrix) -> Matrix:
    """Return the matrix with columns g^i·e_j, i < r − 1, for basis vectors e_j independent over ℚ(ζ_r)."""
    size = action.rows
    columns: list[Matrix] = []
    for j in range(size):
        candidate = [action**i * eye(size).col(j) for i in range(r - 1)]
        stacked = DomainMatrix.from_Matrix(Matrix.hstack(*columns, *candidate)).convert_to(QQ)
        if stacked.rank() == len(columns) + r - 1:
            columns.extend(candidate)
        if len(columns) == size:
            break
    return Matrix.hstack(*columns)


def module_steinitz_class(r: int, action: Matrix, group: ClassGroup) -> SteinitzClass:
    """Return the Steinitz class of ℤ^n as ℤ[ζ_r]-module with ζ_r acting by the matrix.

    The module is embedded in ℚ(ζ_r)^k; peeling off one coordinate at a time writes it as a sum of ideals.
    """
    size = action.rows
    if size % (r - 1):
        message = f"a ℤ[ζ_{r}]-module has ℤ-rank divisible by {r - 1}, got {size}"
        raise ShapeMismatchError(message)
    rank = size // (r - 1)
    if rank == 0:
        return SteinitzClass(0, group.zero())
    basis = _independent_generators(r, action)
    inverse = DomainMatrix.from_Matrix(basis).convert_to(QQ).inv().to_Matrix()
    denominator = ilcm(*(value.q for value in inverse), 1)
    rows = [[int(inverse[i, j] * denominator) for i in range(size)] for j in range(size)]
    total = group.zero()
    for block in range(rank):
        columns = slice(block * (r - 1), (block + 1) * (r - 1))
        content = gcd(*(value for row in rows for value in row[columns]))
        elements = [CycInt(r, tuple(value // content for value in row[columns])) for row in rows]
        ideal = CycIdeal.from_generators(r, elements)
        LOGGER.debug("coordinate %d spans an ideal of norm %d", block, ideal.norm)
        total += group.class_of(ideal)
        rows = _left_kernel(rows, columns)
    return SteinitzClass(rank, total)


def steinitz_rim(lattice: GLattice, exponent: int, group: ClassGroup) -> SteinitzClass:
    """Return the Steinitz class of M^(∨,χ) = (M^∨ ⊗ ℤ[ζ_r]χ^(−1))^G for χ(g) = ζ_r^exponent.

    G-invariant maps M → ℤ[ζ_r] with g acting by ζ_r^(−exponent) factor through the cyclotomic part M̄ of M, so
    M^(∨,χ) is the σ_(−exponent)-twisted dual of M̄ and its class is −σ_(−exponent)[M̄].
    """
    if exponent % lattice.r == 0:
        message = f"the character must have order {lattice.r}"
        raise InputError(message)
    if group.r != lattice.r:
        message = f"class group of ℚ(ζ_{group.r}) for a lattice over ℤ/{lattice.r}"
        raise ShapeMismatchError(message)
    module = module_steinitz_class(lattice.r, cyclotomic_part(lattice), group)
    return SteinitzClass(module.rank, -group.galois_action(-exponent, module.ideal_class))


def push_forward(r: int, element: GroupRingElement, exponent: int) -> CycInt:
    """Return χ(Σ c_i g^i) = Σ c_i ζ_r^(exponent·i)."""
    if len(element) != r:
        message = f"group ring elements of ℤ/{r} have {r} coefficients, got {len(element)}"
        raise ShapeMismatchError(message)
    cyclic = [0] * r
    for i, value in enumerate(element):
        cyclic[i * exponent % r] += value
    return CycInt.from_cyclic(r, cyclic)


def determinant(matrix: list[list[CycInt]]) -> CycInt:
    """Return the determinant of a square matrix over ℤ[ζ_r], by expansion along the first row."""
    if len(matrix) == 1:
        return matrix[0][0]
    total = matrix[0][0] * 0
    for j, entry in enumerate(matrix[0]):
        if not entry.is_zero():
            minor = determinant([row[:j] + row[j + 1 :] for row in matrix[1:]])
            total += entry * minor * (-1) ** j
    return total


def _minors(matrix: list[list[CycInt]], size: int) -> Iterator[CycInt]:
    """Yield the nonzero maximal minors."""
    for chosen in combinations(range(len(matrix)), size):
        if not (minor := determinant([list(matrix[i]) for i in chosen])).is_zero():
            yield minor


def s_chi_finite(presentation: Sequence[Sequence[GroupRingElement]], exponent: int, group: ClassGroup) -> IdealClass:
    """Return s_χ(T) for T = ℤ[G]^b / (rows of the presentation), with χ(g) = ζ_r^exponent.

    T ⊗ ℤ[ζ_r] has the ideal of maximal minors as Fitting ideal 𝔉, and s_χ(T) = [ℤ[ζ_r]^b] − [image] = −[𝔉].
    """
    r = group.r
    if not presentation or any(len(row) != len(presentation[0]) for row in presentation):
        message = "the presentation must be a nonempty matrix"
        raise ShapeMismatchError(message)
    generators = len(presentation[0])
    pushed = [[push_forward(r, entry, exponent) for entry in row] for row in presentation]
    minors = list(_minors(pushed, generators))
    if not minors:
        message = "the presentation does not define a finite module"
        raise InputError(message)
    return -group.class_of(CycIdeal.from_generators(r, minors))


Term = tuple[str, bool, int]  # Name, whether conjugated, coefficient


@dataclass(frozen=True)
class ClassExpression:
    """Formal ℤ-combination of named ideal classes and their complex conjugates."""

    terms: tuple[Term, ...] = ()

    def __post_init__(self) -> None:
        """Collect equal terms."""
        counts: Counter[tuple[str, bool]] = Counter()
        for name, conjugated, coefficient in self.terms:
            counts[(name, conjugated)] += coefficient
        terms = tuple(sorted((name, conjugated, value) for (name, conjugated), value in counts.items() if value))
        object.__setattr__(self, "terms", terms)

    @classmethod
    def symbol(cls, name: str) -> ClassExpression:
        """Return the expression consisting of one named class."""
        return cls(((name, False, 1),))

    def __add__(self, other: ClassExpression) -> ClassExpression:
        """Add the expressions."""
        return ClassExpression(self.terms + other.terms)

    def __neg__(self) -> ClassExpression:
        """Negate the expression."""
        return ClassExpression(tuple((name, conjugated, -value) for name, conjugated, value in self.terms))

    def __sub__(self, other: ClassExpression) -> ClassExpression:
        """Subtract the expressions."""
        return self + (-other)

    def __rmul__(self, factor: int) -> ClassExpression:
        """Return a multiple of the expression."""
        return ClassExpression(tuple((name, conjugated, factor * value) for name, conjugated, value in self.terms))

    def conjugate(self) -> ClassExpression:
        """Return the complex conjugate."""
        return ClassExpression(tuple((name, not conjugated, value) for name, conjugated, value in self.terms))

    def dual(self) -> ClassExpression:
        """Return the class of the ℤ-dual module: s_χ(M^∨) = −conj(s_χ(M))."""
        return -self.conjugate()

    def evaluate(self, values: Mapping[str, IdealClass], group: ClassGroup) -> IdealClass:
        """Return the value of the expression in the class group."""
        total = group.zero()
        for name, conjugated, coefficient in self.terms:
            if name not in values:
                message = f"no value for the class {name}"
                raise InputError(message)
            value = group.conjugate(values[name]) if conjugated else values[name]
            total += value * coefficient
        return total

    def __str__(self) -> str:
        """Return the expression with conj for conjugated classes."""
        if not self.terms:
            return "0"
        parts = []
        for name, conjugated, coefficient in self.terms:
            symbol = f"conj({name})" if conjugated else name
            factor = "" if abs(coefficient) == 1 else f"{abs(coefficient)}·"
            parts.append(("−" if coefficient < 0 else "+") + f" {factor}{symbol}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "−" + text[2:]


def dual_class(expression: ClassExpression) -> ClassExpression:
    """Return the class of the dual module; applying it twice gives the expression back."""
    return expression.dual()
