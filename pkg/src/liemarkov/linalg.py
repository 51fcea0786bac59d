"""Exact rational matrix arithmetic for small dense matrices.

Matrices are immutable tuples of row tuples with ``int`` or
``fractions.Fraction`` entries.  Everything here is exact: no floating
point, so subspace membership and equality are decisions rather than
tolerance judgements.  Floating point enters the package only in
:mod:`liemarkov.closure`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Scalar = int | Fraction
Matrix = tuple[tuple[Scalar, ...], ...]
Vector = tuple[Scalar, ...]


def mat(rows: Sequence[Sequence[Scalar]]) -> Matrix:
    """Freeze a nested sequence into a Matrix tuple."""
    return tuple(tuple(row) for row in rows)


def identity(k: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))


def zeros(k: int) -> Matrix:
    return tuple((0,) * k for _ in range(k))


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c: Scalar, a: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, m = len(a), len(b[0])
    inner = range(len(b))
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in inner) for j in range(m))
        for i in range(n)
    )


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def is_zero(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def column_sums(a: Matrix) -> Vector:
    return tuple(sum(col) for col in zip(*a))


def has_zero_column_sums(a: Matrix) -> bool:
    return all(s == 0 for s in column_sums(a))


def has_nonneg_offdiag(a: Matrix) -> bool:
    """True iff the matrix lies in the stochastic cone (given zero column sums)."""
    return all(
        x >= 0 for i, row in enumerate(a) for j, x in enumerate(row) if i != j
    )


def conjugate(a: Matrix, perm: Sequence[int]) -> Matrix:
    """Simultaneous row/column permutation K A K^T.

    ``perm`` is an image array: the result r satisfies
    r[perm[i]][perm[j]] = a[i][j].
    """
    k = len(a)
    out = [[0] * k for _ in range(k)]
    for i in range(k):
        pi = perm[i]
        row = a[i]
        orow = out[pi]
        for j in range(k):
            orow[perm[j]] = row[j]
    return tuple(tuple(r) for r in out)


def vectorize(a: Matrix) -> Vector:
    """Row-major flattening; fixed so canonical keys are reproducible."""
    return tuple(x for row in a for x in row)


def unvectorize(v: Sequence[Scalar], k: int) -> Matrix:
    return tuple(tuple(v[i * k + j] for j in range(k)) for i in range(k))


def rref(rows: Sequence[Sequence[Scalar]]) -> tuple[Vector, ...]:
    """Reduced row-echelon form over the rationals.

    Zero rows are dropped, pivots are normalized to 1, and pivot columns
    are cleared above and below, so the result is the unique canonical
    basis of the row space: two spans are equal iff their rrefs are.
    """
    work = [[Fraction(x) for x in row] for row in rows]
    if not work:
        return ()
    ncols = len(work[0])
    pivot_row = 0
    for col in range(ncols):
        found = None
        for r in range(pivot_row, len(work)):
            if work[r][col] != 0:
                found = r
                break
        if found is None:
            continue
        work[pivot_row], work[found] = work[found], work[pivot_row]
        inv = 1 / work[pivot_row][col]
        work[pivot_row] = [x * inv for x in work[pivot_row]]
        for r in range(len(work)):
            if r != pivot_row and work[r][col] != 0:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[pivot_row])]
        pivot_row += 1
        if pivot_row == len(work):
            break
    return tuple(tuple(row) for row in work[:pivot_row] if any(x != 0 for x in row))


def pivot_columns(rref_rows: Sequence[Vector]) -> list[int]:
    cols = []
    for row in rref_rows:
        for j, x in enumerate(row):
            if x != 0:
                cols.append(j)
                break
    return cols


def solve_in_rowspace(
    rref_rows: Sequence[Vector], v: Sequence[Scalar]
) -> tuple[Fraction, ...] | None:
    """Coefficients of ``v`` over canonical rref rows, or None if outside.

    The pivot columns of an rref basis read the coefficients off directly;
    the residual check then decides membership exactly.
    """
    v = [Fraction(x) for x in v]
    coeffs = [v[c] for c in pivot_columns(rref_rows)]
    residual = list(v)
    for c, row in zip(coeffs, rref_rows):
        if c != 0:
            residual = [x - c * y for x, y in zip(residual, row)]
    if any(x != 0 for x in residual):
        return None
    return tuple(coeffs)


def rref_with_transform(
    rows: Sequence[Vector],
) -> tuple[tuple[Vector, ...], tuple[Vector, ...]]:
    """rref plus the row-operation record T with rref = T @ rows.

    Used to translate coefficients over the rref basis back into
    coefficients over the original (possibly dependent) generators.
    """
    n = len(rows)
    if n == 0:
        return (), ()
    ncols = len(rows[0])
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(rows)]
    pivot_row = 0
    for col in range(ncols):
        found = None
        for r in range(pivot_row, n):
            if aug[r][col] != 0:
                found = r
                break
        if found is None:
            continue
        aug[pivot_row], aug[found] = aug[found], aug[pivot_row]
        inv = 1 / aug[pivot_row][col]
        aug[pivot_row] = [x * inv for x in aug[pivot_row]]
        for r in range(n):
            if r != pivot_row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[pivot_row])]
        pivot_row += 1
        if pivot_row == n:
            break
    rank = 0
    for r in range(n):
        if any(x != 0 for x in aug[r][:ncols]):
            rank = r + 1
    basis = tuple(tuple(aug[r][:ncols]) for r in range(rank))
    transform = tuple(tuple(aug[r][ncols:]) for r in range(rank))
    return basis, transform
