"""Relation lattices: sparse elimination with provenance followed by a Smith normal form."""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property
from math import prod

from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_decomp

Vector = dict[int, int]  # Sparse integer vector, position ↦ nonzero entry

LOGGER = logging.getLogger(__name__)


def add_multiple(target: Vector, source: Vector, factor: int) -> None:
    """Add factor times the source to the target, in place."""
    for key, value in source.items():
        new = target.get(key, 0) + factor * value
        if new:
            target[key] = new
        else:
            del target[key]


@dataclass(eq=False)
class Row:
    """A row of the relation matrix together with the combination of relations it came from."""

    entries: Vector
    provenance: Vector

    def add_multiple(self, other: Row, factor: int) -> None:
        """Add factor times the other row, in place."""
        add_multiple(self.entries, other.entries, factor)
        add_multiple(self.provenance, other.provenance, factor)

    def negate(self) -> None:
        """Negate the row, in place."""
        self.entries = {key: -value for key, value in self.entries.items()}
        self.provenance = {key: -value for key, value in self.provenance.items()}


@dataclass
class RelationLattice:
    """The lattice of relations among the columns, spanned by the added vectors."""

    columns: int
    vectors: list[Vector] = field(default_factory=list)
    _seen: set[frozenset[tuple[int, int]]] = field(default_factory=set)

    def add(self, vector: Vector) -> bool:
        """Add the relation unless it is zero or already known; return whether it was added."""
        key = frozenset(vector.items())
        if not vector or key in self._seen:
            return False
        self._seen.add(key)
        self.vectors.append(dict(vector))
        return True

    def __len__(self) -> int:
        """Return the number of relations."""
        return len(self.vectors)

    def copy(self) -> RelationLattice:
        """Return a copy to which relations can be added independently."""
        return RelationLattice(self.columns, list(self.vectors), set(self._seen))

    def reduce(self) -> ReducedLattice:
        """Eliminate the columns with unit entries first, then bring the rest in echelon form."""
        rows = [Row(dict(vector), {index: 1}) for index, vector in enumerate(self.vectors)]
        pivots = _eliminate_unit_pivots(rows)
        rows = [row for row in rows if row.entries and row not in pivots.values()]
        free = [column for column in range(self.columns) if column not in pivots]
        echelon = _echelon(rows, free)
        LOGGER.debug(
            "%d relations on %d columns: %d unit pivots, %d echelon rows",
            len(self.vectors),
            self.columns,
            len(pivots),
            len(echelon),
        )
        return ReducedLattice(self.columns, pivots, free, echelon)


def _eliminate_unit_pivots(rows: list[Row]) -> dict[int, Row]:
    """Pivot on ±1 entries, sparsest rows first, until no unit entry remains outside the pivot columns."""
    pivots: dict[int, Row] = {}
    active = list(rows)
    while True:
        best: tuple[Row, int] | None = None
        for row in active:
            if best is not None and len(row.entries) >= len(best[0].entries):
                continue
            column = next((key for key, value in row.entries.items() if value in (1, -1)), None)
            if column is not None:
                best = (row, column)
        if best is None:
            return pivots
        pivot, column = best
        active.remove(pivot)
        if pivot.entries[column] < 0:
            pivot.negate()
        for row in (*active, *pivots.values()):
            if factor := row.entries.get(column):
                row.add_multiple(pivot, -factor)
        pivots[column] = pivot
        active = [row for row in active if row.entries]


def _echelon(rows: list[Row], free: list[int]) -> list[Row]:
    """Return rows in echelon form on the free columns, one per column as long as the rank allows."""
    echelon: list[Row] = []
    for column in free:
        with_column = [row for row in rows if column in row.entries]
        while len(with_column) > 1:
            pivot = min(with_column, key=lambda row: abs(row.entries[column]))
            for row in with_column:
                if row is not pivot:
                    row.add_multiple(pivot, -(row.entries[column] // pivot.entries[column]))
            with_column = [row for row in with_column if column in row.entries]
        if not with_column:
            break
        pivot = with_column[0]
        if pivot.entries[column] < 0:
            pivot.negate()
        echelon.append(pivot)
        rows = [row for row in rows if row is not pivot and row.entries]
    return echelon


@dataclass
class ReducedLattice:
    """ℤ^columns modulo the relation lattice, as a finite abelian group when the relations have full rank."""

    columns: int
    pivots: dict[int, Row]
    free: list[int]
    echelon: list[Row]

    @property
    def has_full_rank(self) -> bool:
        """Return whether the quotient is finite."""
        return len(self.echelon) == len(self.free)

    @property
    def order(self) -> int | None:
        """Return the order of the quotient, None if it is infinite."""
        if not self.has_full_rank:
            return None
        return prod(row.entries[column] for row, column in zip(self.echelon, self.free, strict=True))

    @cached_property
    def _smith(self) -> tuple[list[int], list[list[int]], list[list[int]]]:
        """Return the diagonal d, and S and T with S·E·T = diag(d) for the echelon matrix E."""
        if not self.free:
            return [], [], []
        matrix = Matrix([[row.entries.get(column, 0) for column in self.free] for row in self.echelon])
        diagonal, s, t = smith_normal_decomp(matrix)
        size = len(self.free)
        return (
            [int(diagonal[i, i]) for i in range(size)],
            [[int(s[i, j]) for j in range(size)] for i in range(size)],
            [[int(t[i, j]) for j in range(size)] for i in range(size)],
        )

    @property
    def invariants(self) -> tuple[int, ...]:
        """Return the invariant factors larger than one."""
        return tuple(abs(d) for d in self._smith[0] if abs(d) > 1)

    def project(self, vector: Vector) -> list[int]:
        """Return the image of the vector on the free columns, with the pivot columns substituted away."""
        image = {column: value for column, value in vector.items() if column not in self.pivots}
        for column, value in vector.items():
            if column in self.pivots:
                add_multiple(image, self.pivots[column].entries, -value)
        return [image.get(column, 0) for column in self.free]

    def _transformed(self, vector: Vector) -> list[int]:
        """Return the projected vector times T."""
        projected = self.project(vector)
        t = self._smith[2]
        return [sum(projected[i] * t[i][j] for i in range(len(projected))) for j in range(len(projected))]

    def lift(self, coordinates: tuple[int, ...]) -> Vector:
        """Return a vector on the free columns whose class has the given coordinates."""
        diagonal, _, t = self._smith
        values = iter(coordinates)
        full = [next(values) if abs(d) > 1 else 0 for d in diagonal]
        inverse = Matrix(t).inv()
        size = len(full)
        lifted = [int(sum(full[i] * inverse[i, j] for i in range(size))) for j in range(size)]
        return {self.free[j]: value for j, value in enumerate(lifted) if value}

    def coordinates(self, vector: Vector) -> tuple[int, ...]:
        """Return the class of the vector as coordinates modulo the invariant factors."""
        diagonal = self._smith[0]
        transformed = self._transformed(vector)
        return tuple(value % abs(d) for value, d in zip(transformed, diagonal, strict=True) if abs(d) > 1)

    def express(self, vector: Vector) -> Vector | None:
        """Return integer coefficients c with Σ c_k·relation_k = vector, None if the vector is no relation."""
        diagonal, s, _ = self._smith
        transformed = self._transformed(vector)
        if any(value % d if d else value for value, d in zip(transformed, diagonal, strict=True)):
            return None
        quotients = [value // d if d else 0 for value, d in zip(transformed, diagonal, strict=True)]
        coefficients: Vector = {}
        for column, value in vector.items():
            if column in self.pivots:
                add_multiple(coefficients, self.pivots[column].provenance, value)
        size = len(quotients)
        for k, row in enumerate(self.echelon):
            if factor := sum(quotients[i] * s[i][k] for i in range(size)):
                add_multiple(coefficients, row.provenance, factor)
        return coefficients


def vector_sum(vectors: Iterable[tuple[int, Vector]]) -> Vector:
    """Return Σ c·v over the (c, v) pairs."""
    total: Vector = {}
    for factor, vector in vectors:
        add_multiple(total, vector, factor)
    return total
