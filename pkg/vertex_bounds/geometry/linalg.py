"""
Exact linear algebra over the rationals.

Matrices are sequences of rows and vectors are sequences of ``Fraction`` values.
Nothing in this module uses floating point.
"""

from fractions import Fraction

from .. import errors


def dot(u, v):
    """
    Returns the exact inner product of two vectors.
    """
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def matvec(matrix, vector):
    """
    Returns ``matrix * vector``.
    """
    return tuple(dot(row, vector) for row in matrix)


def vecmat(vector, matrix):
    """
    Returns ``vector^T * matrix``.
    """
    columns = len(matrix[0]) if matrix else 0
    return tuple(
        sum((vector[i] * matrix[i][j] for i in range(len(matrix))), Fraction(0))
        for j in range(columns)
    )


def transpose(matrix):
    return tuple(zip(*matrix))


def identity(n):
    return tuple(
        tuple(Fraction(int(i == j)) for j in range(n))
        for i in range(n)
    )


def rref(rows, columns = None):
    """
    Returns the reduced row echelon form of ``rows``.

    Args:
        rows: The matrix as a sequence of rows.
        columns: The number of columns, required only when ``rows`` is empty.

    Returns:
        A ``(reduced, pivots)`` tuple, where ``reduced`` contains only the nonzero
        rows and ``pivots`` lists the pivot column of each of them.
    """
    matrix = [[Fraction(x) for x in row] for row in rows]
    if columns is None:
        columns = len(matrix[0]) if matrix else 0
    pivots = []
    top = 0
    for col in range(columns):
        pivot = next((i for i in range(top, len(matrix)) if matrix[i][col] != 0), None)
        if pivot is None:
            continue
        matrix[top], matrix[pivot] = matrix[pivot], matrix[top]
        scale = matrix[top][col]
        matrix[top] = [x / scale for x in matrix[top]]
        for i in range(len(matrix)):
            if i != top and matrix[i][col] != 0:
                factor = matrix[i][col]
                matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[top])]
        pivots.append(col)
        top += 1
        if top == len(matrix):
            break
    return [tuple(row) for row in matrix[:top]], pivots


def rank(rows):
    """
    Returns the exact rank of a matrix.
    """
    if not rows:
        return 0
    return len(rref(rows)[1])


def nullspace(rows, columns):
    """
    Returns a basis of ``{z : rows * z = 0}``.

    The basis vectors are the standard ones read off the reduced row echelon
    form, so they are exact but not orthogonal.
    """
    reduced, pivots = rref(rows, columns)
    free = [j for j in range(columns) if j not in set(pivots)]
    basis = []
    for f in free:
        vector = [Fraction(0)] * columns
        vector[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            vector[p] = -row[f]
        basis.append(tuple(vector))
    return basis


def solve(matrix, rhs):
    """
    Solves the square system ``matrix * x = rhs`` exactly.

    Raises:
        ComputationError: If ``matrix`` is singular.
    """
    n = len(matrix)
    augmented = [list(row) + [b] for row, b in zip(matrix, rhs)]
    reduced, pivots = rref(augmented, n + 1)
    if pivots != list(range(n)):
        raise errors.ComputationError('Matrix is singular.')
    return tuple(row[n] for row in reduced)


def inverse(matrix):
    """
    Returns the exact inverse of a square matrix.

    Raises:
        ComputationError: If ``matrix`` is singular.
    """
    n = len(matrix)
    augmented = [list(row) + list(e) for row, e in zip(matrix, identity(n))]
    reduced, pivots = rref(augmented, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) != n:
        raise errors.ComputationError('Matrix is singular.')
    return tuple(tuple(row[n:]) for row in reduced)


def matmul(left, right):
    columns = transpose(right)
    return tuple(tuple(dot(row, col) for col in columns) for row in left)


def affine_parametrization(equations, offsets, columns):
    """
    Parametrizes the solutions of ``equations * x = offsets`` as ``x0 + N z``.

    Args:
        equations: The coefficient rows.
        offsets: The right-hand sides.
        columns: The number of unknowns.

    Returns:
        A ``(x0, directions)`` tuple, where ``directions`` is a list of the
        columns of ``N``.

    Raises:
        EmptyPolyhedronError: If the equations are inconsistent.
    """
    augmented = [list(row) + [b] for row, b in zip(equations, offsets)]
    reduced, pivots = rref(augmented, columns + 1)
    if columns in pivots:
        raise errors.EmptyPolyhedronError('Equality constraints are inconsistent.')
    x0 = [Fraction(0)] * columns
    for row, p in zip(reduced, pivots):
        x0[p] = row[columns]
    return tuple(x0), nullspace(equations, columns)


def is_positive_semidefinite(matrix):
    """
    Indicates if a symmetric rational matrix is positive semidefinite, using
    exact symmetric elimination.
    """
    work = [[Fraction(x) for x in row] for row in matrix]
    n = len(work)
    for k in range(n):
        pivot = work[k][k]
        if pivot < 0:
            return False
        if pivot == 0:
            if any(work[k][j] != 0 for j in range(k + 1, n)):
                return False
            continue
        for i in range(k + 1, n):
            factor = work[i][k] / pivot
            if factor != 0:
                for j in range(k + 1, n):
                    work[i][j] -= factor * work[k][j]
    return True
