"""Exact rational linear algebra on small dense matrices.

Matrices are tuples of row tuples of :class:`fractions.Fraction`.  Fractions
are always stored in lowest terms with a positive denominator, so equality of
entries is structural equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import RankDeficient, SingularMatrix

RationalMatrix = tuple  # tuple[tuple[Fraction, ...], ...]


def matrix(rows: Sequence[Sequence]) -> RationalMatrix:
    """Build a rational matrix, checking the grid is rectangular and nonempty."""
    rows = [tuple(Fraction(x) for x in row) for row in rows]
    if not rows or not rows[0]:
        raise ValueError("matrix must have positive dimensions")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValueError("ragged matrix")
    return tuple(rows)


def identity(n: int) -> RationalMatrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def diag(*entries) -> RationalMatrix:
    n = len(entries)
    return tuple(
        tuple(Fraction(entries[i]) if i == j else Fraction(0) for j in range(n))
        for i in range(n)
    )


def shape(a: RationalMatrix) -> tuple[int, int]:
    return len(a), len(a[0])


def transpose(a: RationalMatrix) -> RationalMatrix:
    return tuple(zip(*a))


def matmul(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    if len(a[0]) != len(b):
        raise ValueError(f"shape mismatch: {shape(a)} @ {shape(b)}")
    cols = list(zip(*b))
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols)
        for row in a
    )


def matvec(a: RationalMatrix, v: Sequence) -> tuple:
    if len(a[0]) != len(v):
        raise ValueError("shape mismatch in matrix-vector product")
    return tuple(sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a)


def from_columns(columns: Sequence[Sequence]) -> RationalMatrix:
    return transpose(matrix(columns))


def _eliminate(a, rhs_cols: int):
    """Reduce the augmented matrix ``a`` to reduced row echelon form in place.

    Only the first ``len(a[0]) - rhs_cols`` columns are used as pivots.
    Returns the list of pivot columns.
    """
    n_rows = len(a)
    n_cols = len(a[0]) - rhs_cols
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for i in range(n_rows):
            if i != r and a[i][c] != 0:
                factor = a[i][c]
                a[i] = [x - factor * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return pivots


def rank(a: RationalMatrix) -> int:
    work = [list(row) for row in a]
    return len(_eliminate(work, 0))


def det(a: RationalMatrix) -> Fraction:
    n, m = shape(a)
    if n != m:
        raise ValueError("determinant of a non-square matrix")
    work = [list(row) for row in a]
    result = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if work[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            work[c], work[pivot] = work[pivot], work[c]
            result = -result
        p = work[c][c]
        result *= p
        for i in range(c + 1, n):
            if work[i][c] != 0:
                factor = work[i][c] / p
                work[i] = [x - factor * y for x, y in zip(work[i], work[c])]
    return result


def solve_linear(a: RationalMatrix, b: Sequence) -> tuple:
    """Return the unique ``x`` with ``a @ x == b``.

    Raises SingularMatrix if ``a`` is not invertible.
    """
    n, m = shape(a)
    if n != m or len(b) != n:
        raise ValueError("solve_linear needs a square system")
    work = [list(row) + [Fraction(y)] for row, y in zip(a, b)]
    if len(_eliminate(work, 1)) < n:
        raise SingularMatrix("matrix is singular")
    return tuple(row[-1] for row in work)


def inverse(a: RationalMatrix) -> RationalMatrix:
    n, m = shape(a)
    if n != m:
        raise ValueError("inverse of a non-square matrix")
    eye = identity(n)
    work = [list(row) + list(e) for row, e in zip(a, eye)]
    if len(_eliminate(work, n)) < n:
        raise SingularMatrix("matrix is singular")
    return tuple(tuple(row[n:]) for row in work)


def projection_matrix(v: RationalMatrix) -> RationalMatrix:
    """Orthogonal projection onto the row space of ``v``: Vt (V Vt)^-1 V.

    For an m x n matrix whose columns are n vectors spanning Q^m this is the
    n x n matrix whose entries color the complete graph on those vectors.
    """
    vt = transpose(v)
    try:
        gram_inv = inverse(matmul(v, vt))
    except SingularMatrix:
        raise RankDeficient("rows of V are linearly dependent") from None
    return matmul(matmul(vt, gram_inv), v)


def is_integral(a: RationalMatrix) -> bool:
    return all(x.denominator == 1 for row in a for x in row)


def is_unimodular(m: Sequence[Sequence[int]]) -> bool:
    """True iff ``m`` is a square integer matrix with determinant +1 or -1."""
    a = matrix(m)
    if len(a) != len(a[0]) or not is_integral(a):
        return False
    return abs(det(a)) == 1


def to_int_matrix(a: RationalMatrix) -> tuple[tuple[int, ...], ...]:
    if not is_integral(a):
        raise ValueError("matrix has non-integer entries")
    return tuple(tuple(int(x) for x in row) for row in a)
