from fractions import Fraction

import pytest

from vertex_bounds import errors
from vertex_bounds.geometry import linalg


def test_rank_counts_independent_rows():
    assert linalg.rank([(1, 2), (2, 4)]) == 1
    assert linalg.rank([(1, 0, 0), (0, 1, 0), (1, 1, 0)]) == 2
    assert linalg.rank([]) == 0


def test_nullspace_is_annihilated():
    rows = [(1, 1, 1, 0), (0, 1, -1, 1)]
    basis = linalg.nullspace(rows, 4)
    assert len(basis) == 2
    for vector in basis:
        assert all(linalg.dot(row, vector) == 0 for row in rows)


def test_solve_is_exact():
    solution = linalg.solve([(3, 1), (1, 2)], (Fraction(9), Fraction(8)))
    assert solution == (Fraction(2), Fraction(3))


def test_solve_singular_raises():
    with pytest.raises(errors.ComputationError):
        linalg.solve([(1, 2), (2, 4)], (1, 2))


def test_inverse_times_matrix_is_identity():
    matrix = ((Fraction(2), Fraction(1)), (Fraction(7), Fraction(4)))
    assert linalg.matmul(linalg.inverse(matrix), matrix) == linalg.identity(2)


def test_affine_parametrization():
    x0, directions = linalg.affine_parametrization([(1, 1, 0)], [Fraction(2)], 3)
    assert sum(x0[:2]) == 2
    assert len(directions) == 2
    assert all(d[0] + d[1] == 0 for d in directions)


def test_affine_parametrization_inconsistent():
    with pytest.raises(errors.EmptyPolyhedronError):
        linalg.affine_parametrization([(1, 1), (1, 1)], [Fraction(1), Fraction(2)], 2)


@pytest.mark.parametrize('matrix,expected', [
    ([(2, 1), (1, 2)], True),
    ([(1, 1), (1, 1)], True),
    ([(1, 2), (2, 1)], False),
    ([(0, 1), (1, 0)], False),
    ([(0, 0), (0, 0)], True),
])
def test_is_positive_semidefinite(matrix, expected):
    assert linalg.is_positive_semidefinite(matrix) is expected
