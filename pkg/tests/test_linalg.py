import random
from fractions import Fraction

from liemarkov import linalg


def random_matrix(rng, rows, cols, lo=-5, hi=5):
    return [[Fraction(rng.randint(lo, hi)) for _ in range(cols)] for _ in range(rows)]


def test_rref_canonical_for_row_space():
    rng = random.Random(1)
    for _ in range(30):
        rows = random_matrix(rng, 3, 6)
        base = linalg.rref(rows)
        # mixing rows by invertible operations leaves the rref unchanged
        mixed = [
            [3 * a + b for a, b in zip(rows[0], rows[1])],
            [a - 2 * c for a, c in zip(rows[0], rows[2])],
            rows[2],
        ]
        same_span = linalg.rref(list(rows) + mixed)
        assert linalg.rref(mixed + list(rows)) == same_span
        assert len(base) <= 3


def test_rref_pivots_normalized():
    rows = [[Fraction(2), Fraction(4)], [Fraction(1), Fraction(3)]]
    result = linalg.rref(rows)
    assert result == ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))


def test_rref_drops_zero_rows():
    rows = [[0, 0, 0], [1, 2, 3], [2, 4, 6]]
    assert linalg.rref(rows) == ((Fraction(1), Fraction(2), Fraction(3)),)


def test_solve_in_rowspace_membership():
    rng = random.Random(2)
    rows = linalg.rref(random_matrix(rng, 3, 8))
    coeffs = [Fraction(rng.randint(-4, 4), rng.randint(1, 5)) for _ in rows]
    v = [sum(c * row[j] for c, row in zip(coeffs, rows)) for j in range(8)]
    assert linalg.solve_in_rowspace(rows, v) == tuple(coeffs)


def test_solve_in_rowspace_rejects_outsider():
    rows = linalg.rref([[1, 0, 0, 1], [0, 1, 0, -1]])
    assert linalg.solve_in_rowspace(rows, [0, 0, 1, 0]) is None


def test_rref_with_transform_reconstructs():
    rng = random.Random(3)
    for _ in range(20):
        rows = [tuple(r) for r in random_matrix(rng, 4, 6)]
        basis, transform = linalg.rref_with_transform(rows)
        assert len(basis) == len(transform)
        for b_row, t_row in zip(basis, transform):
            rebuilt = [
                sum(t * rows[i][j] for i, t in enumerate(t_row)) for j in range(6)
            ]
            assert tuple(rebuilt) == b_row
        assert basis == linalg.rref(rows)


def test_conjugate_moves_entries():
    a = linalg.mat([[1, 2], [3, 4]])
    swapped = linalg.conjugate(a, (1, 0))
    assert swapped == ((4, 3), (2, 1))
    assert linalg.conjugate(swapped, (1, 0)) == a


def test_vectorize_round_trip():
    a = linalg.mat([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert linalg.unvectorize(linalg.vectorize(a), 3) == a


def test_column_sum_predicates():
    q = linalg.mat([[-2, 1], [2, -1]])
    assert linalg.has_zero_column_sums(q)
    assert linalg.has_nonneg_offdiag(q)
    assert not linalg.has_zero_column_sums(linalg.mat([[1, 0], [0, 0]]))
    assert not linalg.has_nonneg_offdiag(linalg.mat([[0, -1], [0, 1]]))


def test_mat_mul_against_identity():
    a = linalg.mat([[1, 2], [3, 4]])
    assert linalg.mat_mul(a, linalg.identity(2)) == a
    assert linalg.mat_mul(linalg.identity(2), a) == a
