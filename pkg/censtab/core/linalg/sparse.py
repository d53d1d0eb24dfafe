"""Sparse unit-pivot elimination.

The eliminator repeatedly picks an active row holding a unit entry, records it
as a pivot and clears the pivot column from every other active row. Rows that
never acquire a unit entry stay active as the residual system. Over a prime
field every nonzero entry is a unit, so the residual is always empty there.
"""

from collections import defaultdict
from heapq import heapify, heappop, heappush
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

from censtab.core.exceptions import DimensionMismatchError
from censtab.core.linalg.normal_forms import hermite_lists, rref_lists, smith_lists
from censtab.core.linalg.ring import RingSpec

SparseVector = Dict[int, int]


def clean_vector(ring: RingSpec, vector: Mapping[int, int]) -> SparseVector:
    result = {}
    for index, value in vector.items():
        value = ring.reduce(value)
        if value:
            result[index] = value
    return result


def add_scaled(ring: RingSpec, target: SparseVector, source: Mapping[int, int], factor: int) -> None:
    """target += factor * source, in place."""
    if not factor:
        return
    for index, value in source.items():
        new = ring.reduce(target.get(index, 0) + factor * value)
        if new:
            target[index] = new
        else:
            target.pop(index, None)


class SparseEliminator:
    """Unit-pivot elimination over sparse integer or mod-p rows."""

    def __init__(self, ring: RingSpec, rows: Iterable[Mapping[int, int]], ncols: int):
        self.ring = ring
        self.ncols = ncols
        self.rows: Dict[int, SparseVector] = {}
        self.columns: Dict[int, Set[int]] = defaultdict(set)
        self.alive: Set[int] = set(range(ncols))
        self.steps: List[Tuple[int, SparseVector, int]] = []
        self._versions: Dict[int, int] = defaultdict(int)

        for rid, row in enumerate(rows):
            cleaned = clean_vector(ring, row)
            for index in cleaned:
                if not 0 <= index < ncols:
                    raise DimensionMismatchError(f"column index {index} outside 0..{ncols - 1}")
            if cleaned:
                self.rows[rid] = cleaned
                for index in cleaned:
                    self.columns[index].add(rid)

    def run(self) -> "SparseEliminator":
        heap = [(len(row), rid, 0) for rid, row in self.rows.items()]
        heapify(heap)
        while heap:
            _, rid, version = heappop(heap)
            row = self.rows.get(rid)
            if row is None or version != self._versions[rid]:
                continue
            column = self._choose_column(row)
            if column is None:
                continue
            for touched in self._pivot(rid, column):
                self._versions[touched] += 1
                heappush(heap, (len(self.rows[touched]), touched, self._versions[touched]))
        return self

    def _choose_column(self, row: SparseVector) -> Optional[int]:
        units = [c for c, v in row.items() if self.ring.is_unit(v)]
        if not units:
            return None
        return min(units, key=lambda c: (len(self.columns[c]), c))

    def _pivot(self, rid: int, column: int) -> List[int]:
        ring = self.ring
        row = self.rows.pop(rid)
        for index in row:
            self.columns[index].discard(rid)
        unit = row[column]
        inverse = ring.inverse(unit)

        touched = []
        for other in sorted(self.columns[column]):
            target = self.rows[other]
            factor = ring.reduce(target[column] * inverse)
            for index, value in row.items():
                new = ring.reduce(target.get(index, 0) - factor * value)
                if new:
                    if index not in target:
                        self.columns[index].add(other)
                    target[index] = new
                elif index in target:
                    del target[index]
                    self.columns[index].discard(other)
            if target:
                touched.append(other)
            else:
                del self.rows[other]

        self.columns.pop(column, None)
        self.alive.discard(column)
        self.steps.append((column, row, unit))
        return touched

    def residual(self) -> List[SparseVector]:
        """Active rows left after elimination, in input order."""
        return [dict(self.rows[rid]) for rid in sorted(self.rows)]

    def expressions(self) -> Dict[int, SparseVector]:
        """Each pivoted column as a combination of the surviving columns."""
        ring = self.ring
        combos: Dict[int, SparseVector] = {}
        for column, row, unit in reversed(self.steps):
            factor = -ring.inverse(unit)
            combo: SparseVector = {}
            for index, value in row.items():
                if index == column:
                    continue
                coeff = ring.reduce(factor * value)
                if index in combos:
                    add_scaled(ring, combo, combos[index], coeff)
                else:
                    add_scaled(ring, combo, {index: 1}, coeff)
            combos[column] = combo
        return combos

    def resolve(self, values: Mapping[int, int]) -> SparseVector:
        """Extend values on surviving columns to a solution of the original rows."""
        ring = self.ring
        solution = clean_vector(ring, values)
        for column, row, unit in reversed(self.steps):
            factor = -ring.inverse(unit)
            total = 0
            for index, value in row.items():
                if index != column and index in solution:
                    total += value * solution[index]
            total = ring.reduce(factor * total)
            if total:
                solution[column] = total
        return solution


def _dense(rows: Sequence[Mapping[int, int]], columns: Sequence[int]) -> List[List[int]]:
    return [[row.get(c, 0) for c in columns] for row in rows]


def _dense_nullspace(ring: RingSpec, matrix: List[List[int]], ncols: int) -> List[List[int]]:
    nrows = len(matrix)
    if ring.is_field:
        reduced, pivots = rref_lists(matrix, nrows, ncols, ring.p)
        basis = []
        for free in (j for j in range(ncols) if j not in pivots):
            vector = [0] * ncols
            vector[free] = 1
            for r, pivot in enumerate(pivots):
                vector[pivot] = ring.reduce(-reduced[r][free])
            basis.append(vector)
        return basis
    _, d, v = smith_lists(matrix, nrows, ncols)
    rank = sum(1 for i in range(min(nrows, ncols)) if d[i][i])
    return [[v[i][j] for i in range(ncols)] for j in range(rank, ncols)]


def nullspace(ring: RingSpec, rows: Sequence[Mapping[int, int]], ncols: int) -> List[SparseVector]:
    """Generators of {z : row·z = 0 for every row}; a basis over ℤ and over 𝔽_p."""
    eliminator = SparseEliminator(ring, rows, ncols).run()
    residual = eliminator.residual()
    involved = sorted({c for row in residual for c in row})
    involved_set = set(involved)

    basis: List[SparseVector] = []
    if involved:
        core = _dense_nullspace(ring, _dense(residual, involved), len(involved))
        for vector in core:
            basis.append({involved[k]: x for k, x in enumerate(vector) if x})
    for free in sorted(eliminator.alive):
        if free not in involved_set:
            basis.append({free: 1})

    solutions = []
    for values in basis:
        solution = eliminator.resolve(values)
        if solution:
            solutions.append(solution)
    return solutions


class LatticeSpan:
    """Membership oracle for the span of sparse vectors (a lattice over ℤ, a subspace over 𝔽_p)."""

    def __init__(self, ring: RingSpec, vectors: Iterable[Mapping[int, int]], dim: int):
        self.ring = ring
        self.dim = dim
        eliminator = SparseEliminator(ring, vectors, dim).run()
        self._steps = [(column, row, ring.inverse(unit)) for column, row, unit in eliminator.steps]

        residual = eliminator.residual()
        self._columns = sorted({c for row in residual for c in row})
        self._hermite: List[List[int]] = []
        if self._columns:
            # Residual rows only survive over ℤ
            dense = _dense(residual, self._columns)
            hermite = hermite_lists(dense, len(dense), len(self._columns))
            self._hermite = [row for row in hermite if any(row)]

    @property
    def rank(self) -> int:
        return len(self._steps) + len(self._hermite)

    def reduce(self, vector: Mapping[int, int]) -> SparseVector:
        ring = self.ring
        remainder = clean_vector(ring, vector)
        for column, row, inverse in self._steps:
            coeff = remainder.get(column)
            if coeff:
                add_scaled(ring, remainder, row, -ring.reduce(coeff * inverse))
        return remainder

    def contains(self, vector: Mapping[int, int]) -> bool:
        remainder = self.reduce(vector)
        if not remainder:
            return True
        positions = {c: k for k, c in enumerate(self._columns)}
        if any(c not in positions for c in remainder):
            return False
        dense = [0] * len(self._columns)
        for c, value in remainder.items():
            dense[positions[c]] = value
        for row in self._hermite:
            pivot = next(k for k, x in enumerate(row) if x)
            if dense[pivot] % row[pivot]:
                return False
            q = dense[pivot] // row[pivot]
            if q:
                dense = [x - q * y for x, y in zip(dense, row)]
        return not any(dense)
