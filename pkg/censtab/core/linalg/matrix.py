from dataclasses import dataclass
from typing import Hashable, List, Optional, Sequence, Tuple

import numpy as np
from sympy import Matrix

from censtab.core.exceptions import DimensionMismatchError, RingMismatchError
from censtab.core.linalg.ring import ZZ, RingSpec


def _object_array(rows: Sequence[Sequence[int]], nrows: int, ncols: int) -> np.ndarray:
    array = np.zeros((nrows, ncols), dtype=object)
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            array[i, j] = int(value)
    return array


@dataclass(frozen=True)
class ExactMatrix:
    """Dense matrix of exact scalars with optional basis labels on each axis."""

    ring: RingSpec
    entries: Tuple[Tuple[int, ...], ...]
    ncols: int
    row_labels: Optional[Tuple[Hashable, ...]] = None
    col_labels: Optional[Tuple[Hashable, ...]] = None

    def __post_init__(self):
        for row in self.entries:
            if len(row) != self.ncols:
                raise DimensionMismatchError(f"row of length {len(row)} in a matrix with {self.ncols} columns")
        if self.row_labels is not None:
            self._check_labels(self.row_labels, self.nrows, "row")
        if self.col_labels is not None:
            self._check_labels(self.col_labels, self.ncols, "column")

    @staticmethod
    def _check_labels(labels, expected: int, axis: str):
        if len(labels) != expected:
            raise DimensionMismatchError(f"{len(labels)} {axis} labels for {expected} {axis}s")
        if len(set(labels)) != len(labels):
            raise DimensionMismatchError(f"{axis} labels must be unique")

    @classmethod
    def from_rows(
        cls,
        rows: Sequence[Sequence[int]],
        ring: RingSpec = ZZ,
        ncols: Optional[int] = None,
        row_labels: Optional[Sequence[Hashable]] = None,
        col_labels: Optional[Sequence[Hashable]] = None,
    ) -> "ExactMatrix":
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        entries = tuple(tuple(ring.reduce(int(x)) for x in row) for row in rows)
        return cls(
            ring,
            entries,
            ncols,
            tuple(row_labels) if row_labels is not None else None,
            tuple(col_labels) if col_labels is not None else None,
        )

    @classmethod
    def identity(cls, n: int, ring: RingSpec = ZZ) -> "ExactMatrix":
        return cls.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)], ring, n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int, ring: RingSpec = ZZ) -> "ExactMatrix":
        return cls.from_rows([[0] * ncols for _ in range(nrows)], ring, ncols)

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    def tolist(self) -> List[List[int]]:
        return [list(row) for row in self.entries]

    def to_array(self) -> np.ndarray:
        return _object_array(self.entries, self.nrows, self.ncols)

    def transpose(self) -> "ExactMatrix":
        columns = [[self.entries[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        return ExactMatrix.from_rows(columns, self.ring, self.nrows, self.col_labels, self.row_labels)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ring != other.ring:
            raise RingMismatchError(f"cannot multiply matrices over {self.ring} and {other.ring}")
        if self.ncols != other.nrows:
            raise DimensionMismatchError(f"cannot multiply {self.shape} by {other.shape}")
        if self.ncols == 0:
            return ExactMatrix.zeros(self.nrows, other.ncols, self.ring)
        product = self.to_array().dot(other.to_array())
        return ExactMatrix.from_rows(product.tolist(), self.ring, other.ncols, self.row_labels, other.col_labels)

    def determinant(self) -> int:
        if self.nrows != self.ncols:
            raise DimensionMismatchError("determinant of a non-square matrix")
        if self.nrows == 0:
            return 1
        return self.ring.reduce(int(Matrix(self.tolist()).det()))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.ring == other.ring and self.ncols == other.ncols and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.ring, self.ncols, self.entries))
