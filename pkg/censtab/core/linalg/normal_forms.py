"""Smith, Hermite and reduced row echelon forms on dense exact matrices."""

from typing import List, Optional, Tuple

from censtab.core.exceptions import RingMismatchError
from censtab.core.linalg.matrix import ExactMatrix
from censtab.core.linalg.ring import RingSpec

Rows = List[List[int]]


def _identity(n: int) -> Rows:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _smallest_entry(a: Rows, start: int, nrows: int, ncols: int) -> Optional[Tuple[int, int]]:
    best = None
    best_size = 0
    for i in range(start, nrows):
        row = a[i]
        for j in range(start, ncols):
            value = row[j]
            if value and (best is None or abs(value) < best_size):
                best, best_size = (i, j), abs(value)
                if best_size == 1:
                    return best
    return best


def _swap_rows(a: Rows, i: int, j: int) -> None:
    if i != j:
        a[i], a[j] = a[j], a[i]


def _swap_cols(a: Rows, i: int, j: int) -> None:
    if i != j:
        for row in a:
            row[i], row[j] = row[j], row[i]


def _add_row(a: Rows, target: int, source: int, factor: int) -> None:
    """row[target] += factor * row[source]"""
    if factor:
        src = a[source]
        dst = a[target]
        for k, value in enumerate(src):
            if value:
                dst[k] += factor * value


def _add_col(a: Rows, target: int, source: int, factor: int) -> None:
    """col[target] += factor * col[source]"""
    if factor:
        for row in a:
            if row[source]:
                row[target] += factor * row[source]


def smith_lists(matrix: Rows, nrows: int, ncols: int) -> Tuple[Rows, Rows, Rows]:
    """Return (U, D, V) with U * matrix * V = D in Smith normal form."""
    a = [list(row) for row in matrix]
    u = _identity(nrows)
    v = _identity(ncols)

    t = 0
    while t < min(nrows, ncols):
        pivot = _smallest_entry(a, t, nrows, ncols)
        if pivot is None:
            break
        _swap_rows(a, t, pivot[0])
        _swap_rows(u, t, pivot[0])
        _swap_cols(a, t, pivot[1])
        _swap_cols(v, t, pivot[1])

        while True:
            p = a[t][t]
            clean = True

            # Reduce the pivot column
            for i in range(t + 1, nrows):
                if a[i][t]:
                    q = a[i][t] // p
                    _add_row(a, i, t, -q)
                    _add_row(u, i, t, -q)
                    if a[i][t]:
                        clean = False

            # Reduce the pivot row
            for j in range(t + 1, ncols):
                if a[t][j]:
                    q = a[t][j] // p
                    _add_col(a, j, t, -q)
                    _add_col(v, j, t, -q)
                    if a[t][j]:
                        clean = False

            if not clean:
                # Bring the smallest remainder of the pivot cross into position
                best_i, best_j, best_size = t, t, abs(a[t][t])
                for i in range(t + 1, nrows):
                    if a[i][t] and abs(a[i][t]) < best_size:
                        best_i, best_j, best_size = i, t, abs(a[i][t])
                for j in range(t + 1, ncols):
                    if a[t][j] and abs(a[t][j]) < best_size:
                        best_i, best_j, best_size = t, j, abs(a[t][j])
                _swap_rows(a, t, best_i)
                _swap_rows(u, t, best_i)
                _swap_cols(a, t, best_j)
                _swap_cols(v, t, best_j)
                continue

            # Divisibility chain: fold an offending row into the pivot row
            offender = None
            for i in range(t + 1, nrows):
                if any(a[i][j] % p for j in range(t + 1, ncols) if a[i][j]):
                    offender = i
                    break
            if offender is None:
                break
            _add_row(a, t, offender, 1)
            _add_row(u, t, offender, 1)

        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    return u, a, v


def smith_diagonal(matrix: Rows, nrows: int, ncols: int) -> List[int]:
    _, d, _ = smith_lists(matrix, nrows, ncols)
    return [d[i][i] for i in range(min(nrows, ncols))]


def hermite_lists(matrix: Rows, nrows: int, ncols: int) -> Rows:
    """Row-style Hermite normal form; zero rows collect at the bottom."""
    a = [list(row) for row in matrix]
    r = 0
    for j in range(ncols):
        if r >= nrows:
            break
        while True:
            candidates = [i for i in range(r, nrows) if a[i][j]]
            if not candidates:
                break
            k = min(candidates, key=lambda i: (abs(a[i][j]), i))
            _swap_rows(a, r, k)
            clean = True
            for i in range(r + 1, nrows):
                if a[i][j]:
                    _add_row(a, i, r, -(a[i][j] // a[r][j]))
                    if a[i][j]:
                        clean = False
            if clean:
                break
        if a[r][j] == 0:
            continue
        if a[r][j] < 0:
            a[r] = [-x for x in a[r]]
        p = a[r][j]
        for i in range(r):
            _add_row(a, i, r, -(a[i][j] // p))
        r += 1
    return a


def rref_lists(matrix: Rows, nrows: int, ncols: int, p: int) -> Tuple[Rows, List[int]]:
    """Reduced row echelon form mod p and its pivot columns."""
    a = [[x % p for x in row] for row in matrix]
    pivots = []
    r = 0
    for j in range(ncols):
        if r >= nrows:
            break
        k = next((i for i in range(r, nrows) if a[i][j]), None)
        if k is None:
            continue
        _swap_rows(a, r, k)
        inverse = pow(a[r][j], -1, p)
        a[r] = [(x * inverse) % p for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][j]:
                factor = a[i][j]
                a[i] = [(x - factor * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(j)
        r += 1
    return a, pivots


def _require_integers(matrix: ExactMatrix, operation: str) -> None:
    if matrix.ring.is_field:
        raise RingMismatchError(f"{operation} needs an integer matrix, got one over {matrix.ring}")


def smith_normal_form(matrix: ExactMatrix) -> Tuple[ExactMatrix, ExactMatrix, ExactMatrix]:
    """Smith normal form (U, D, V) with U·M·V = D and unimodular U, V."""
    _require_integers(matrix, "Smith normal form")
    u, d, v = smith_lists(matrix.tolist(), matrix.nrows, matrix.ncols)
    return (
        ExactMatrix.from_rows(u, matrix.ring, matrix.nrows),
        ExactMatrix.from_rows(d, matrix.ring, matrix.ncols),
        ExactMatrix.from_rows(v, matrix.ring, matrix.ncols),
    )


def hermite_normal_form(matrix: ExactMatrix) -> ExactMatrix:
    """Row-style Hermite normal form of an integer matrix."""
    _require_integers(matrix, "Hermite normal form")
    h = hermite_lists(matrix.tolist(), matrix.nrows, matrix.ncols)
    return ExactMatrix.from_rows(h, matrix.ring, matrix.ncols)


def rref(matrix: ExactMatrix) -> ExactMatrix:
    """Reduced row echelon form over a prime field."""
    if not matrix.ring.is_field:
        raise RingMismatchError("rref needs a matrix over a prime field")
    reduced, _ = rref_lists(matrix.tolist(), matrix.nrows, matrix.ncols, matrix.ring.p)
    return ExactMatrix.from_rows(reduced, matrix.ring, matrix.ncols)


def rank(matrix: ExactMatrix) -> int:
    if matrix.ring.is_field:
        _, pivots = rref_lists(matrix.tolist(), matrix.nrows, matrix.ncols, matrix.ring.p)
        return len(pivots)
    return sum(1 for x in smith_diagonal(matrix.tolist(), matrix.nrows, matrix.ncols) if x)


def ring_rank(ring: RingSpec, rows: Rows, ncols: int) -> int:
    return rank(ExactMatrix.from_rows(rows, ring, ncols))
