"""
Exact vertex enumeration for H-described polytopes.

Equality pairs are eliminated first, so polytopes that are full-dimensional
only relative to their affine hull are supported when the equations are given
explicitly. The vertices are then found by a cutting-plane scheme: a bounded
working subsystem is seeded from the optimal bases of the coordinate
directions, its vertices are enumerated exhaustively through rank-``d``
active sets, and the most violated remaining constraint is added until none
is violated.
"""

import itertools
import logging
from fractions import Fraction

from .. import dto, errors
from ..settings import toolkit_settings
from . import linalg
from .solver import ExactSimplexSolver


logger = logging.getLogger(__name__)


class _ReducedSystem:
    """
    The inequalities of a system in coordinates ``z`` of its equality subspace,
    ``x = origin + sum_j z_j directions[j]``, normalised and deduplicated.
    """
    def __init__(self, system):
        equations = []
        values = []
        eliminated = set()
        for i, j in system.equalities:
            equations.append(system.constraints[i].normal)
            values.append(system.constraints[i].offset)
            eliminated.update((i, j))
        n = system.dimension
        if equations:
            self.origin, self.directions = linalg.affine_parametrization(equations, values, n)
        else:
            self.origin = tuple(Fraction(0) for _ in range(n))
            self.directions = [
                tuple(Fraction(int(i == j)) for j in range(n))
                for i in range(n)
            ]
        self.dimension = len(self.directions)
        best = {}
        for index, constraint in enumerate(system.constraints):
            if index in eliminated:
                continue
            normal = tuple(linalg.dot(constraint.normal, d) for d in self.directions)
            offset = constraint.offset - linalg.dot(constraint.normal, self.origin)
            scale = max((abs(x) for x in normal), default = 0)
            if scale == 0:
                if offset < 0:
                    raise errors.EmptyPolyhedronError(
                        'Constraint {} is inconsistent with the equalities.'.format(index)
                    )
                continue
            normal = tuple(x / scale for x in normal)
            offset = offset / scale
            if normal not in best or offset < best[normal]:
                best[normal] = offset
        # Sorted so the result does not depend on the constraint order
        self.rows = sorted(best.items())

    def lift(self, point):
        return tuple(
            o + sum((z * d[k] for z, d in zip(point, self.directions)), Fraction(0))
            for k, o in enumerate(self.origin)
        )

    def as_system(self):
        return dto.HalfspaceSystem.create(self.dimension, self.rows)


def _interior_margin(rows, dimension):
    """
    Returns the largest ``s <= 1`` such that some point has slack at least ``s``
    in every row.
    """
    system = dto.HalfspaceSystem.create(
        dimension + 1,
        [(normal + (Fraction(1), ), offset) for normal, offset in rows] +
            [(tuple(Fraction(0) for _ in range(dimension)) + (Fraction(1), ), Fraction(1))]
    )
    objective = tuple(Fraction(0) for _ in range(dimension)) + (Fraction(1), )
    try:
        return ExactSimplexSolver(system).maximize(objective).value
    except errors.InfeasibleError:
        raise errors.EmptyPolyhedronError('Constraint system is infeasible.')


def _check_full_dimensional(reduced):
    margin = _interior_margin(reduced.rows, reduced.dimension)
    if margin < 0:
        raise errors.EmptyPolyhedronError('Constraint system is infeasible.')
    if margin == 0:
        raise errors.NotFullDimensionalError(
            'Polytope is not full-dimensional relative to its equality constraints.'
        )


def is_full_dimensional(system):
    """
    Indicates if a system has an interior point in ``R^n``.

    Raises:
        EmptyPolyhedronError: If the system is infeasible.
    """
    rows = [(c.normal, c.offset) for c in system.constraints]
    if not rows:
        return True
    rows = [
        (tuple(x / max(abs(y) for y in normal) for x in normal), offset / max(abs(y) for y in normal))
        for normal, offset in rows
    ]
    margin = _interior_margin(rows, system.dimension)
    if margin < 0:
        raise errors.EmptyPolyhedronError('Constraint system is infeasible.')
    return margin > 0


def verify_vertex(system, point):
    """
    Indicates if ``point`` is a vertex of the system, i.e. it satisfies every
    constraint exactly and its active constraints have rank ``n``.
    """
    point = tuple(Fraction(x) for x in point)
    if len(point) != system.dimension:
        return False
    active = []
    for constraint in system.constraints:
        slack = constraint.slack(point)
        if slack < 0:
            return False
        if slack == 0:
            active.append(constraint.normal)
    return linalg.rank(active) == system.dimension


def _working_set(reduced):
    """
    Returns the union of the optimal bases for maximising and minimising each
    coordinate, which describes a bounded polytope.
    """
    solver = ExactSimplexSolver(reduced.as_system())
    working = set()
    basis = None
    for j in range(reduced.dimension):
        for sign in (1, -1):
            objective = tuple(Fraction(sign * int(i == j)) for i in range(reduced.dimension))
            try:
                result = solver.maximize(objective, start = basis)
            except errors.UnboundedError:
                raise errors.UnboundedPolyhedronError('Polyhedron is unbounded.')
            except errors.InfeasibleError:
                raise errors.EmptyPolyhedronError('Constraint system is infeasible.')
            basis = result.basis
            working.update(basis)
    return sorted(working)


def _basic_points(rows, candidates, fixed = ()):
    """
    Yields the basic solutions of every choice of rows from ``candidates``
    that, together with ``fixed``, gives ``d`` linearly independent equations.
    """
    dimension = len(rows[0][0])
    for chosen in itertools.combinations(candidates, dimension - len(fixed)):
        indices = tuple(fixed) + chosen
        try:
            yield linalg.solve(
                [rows[i][0] for i in indices],
                [rows[i][1] for i in indices]
            )
        except errors.ComputationError:
            continue


def _feasible(rows, indices, point):
    return all(linalg.dot(rows[i][0], point) <= rows[i][1] for i in indices)


def _check_working_size(size):
    if size > toolkit_settings.MAX_WORKING_CONSTRAINTS:
        raise errors.TooLargeError(
            'Vertex enumeration needs more than {} working constraints.'.format(
                toolkit_settings.MAX_WORKING_CONSTRAINTS
            )
        )


def enumerate_vertices(system):
    """
    Returns the exact vertex set of a bounded polytope.

    The polytope must be full-dimensional relative to the affine subspace
    defined by its explicit ``equalities``.

    Args:
        system: A :py:class:`~..dto.HalfspaceSystem`.

    Returns:
        A :py:class:`~..dto.VertexSet` in lexicographic order.

    Raises:
        TooLargeError: If the input or the working set exceeds the configured caps.
        DimensionTooLargeError: If the relative dimension exceeds ``MAX_DIMENSION``.
        NotFullDimensionalError: If the polytope has no relative interior point.
        EmptyPolyhedronError: If the system is infeasible.
        UnboundedPolyhedronError: If the polyhedron is unbounded.
    """
    if len(system.constraints) > toolkit_settings.MAX_INPUT_CONSTRAINTS:
        raise errors.TooLargeError(
            'System has more than {} constraints.'.format(toolkit_settings.MAX_INPUT_CONSTRAINTS)
        )
    reduced = _ReducedSystem(system)
    d = reduced.dimension
    if d > toolkit_settings.MAX_DIMENSION:
        raise errors.DimensionTooLargeError(
            'Dimension {} exceeds the maximum of {}.'.format(d, toolkit_settings.MAX_DIMENSION)
        )
    if d == 0:
        point = reduced.origin
        if any(c.slack(point) < 0 for c in system.constraints):
            raise errors.EmptyPolyhedronError('Constraint system is infeasible.')
        return dto.VertexSet.create(system.dimension, [point])
    if not reduced.rows:
        raise errors.UnboundedPolyhedronError('Polyhedron is unbounded.')
    _check_full_dimensional(reduced)
    rows = reduced.rows
    working = _working_set(reduced)
    _check_working_size(len(working))
    logger.info(
        '[n=%d, d=%d] Enumerating vertices from a working set of %d of %d constraints',
        system.dimension, d, len(working), len(rows)
    )
    vertices = {
        point
        for point in _basic_points(rows, working)
        if _feasible(rows, working, point)
    }
    remaining = sorted(set(range(len(rows))) - set(working))
    while True:
        worst, worst_index = 0, None
        for h in remaining:
            normal, offset = rows[h]
            violation = max(linalg.dot(normal, v) - offset for v in vertices)
            if violation > worst:
                worst, worst_index = violation, h
        if worst_index is None:
            break
        h = worst_index
        _check_working_size(len(working) + 1)
        logger.debug('[d=%d] Adding constraint %d with violation %s', d, h, worst)
        kept = {
            v for v in vertices
            if linalg.dot(rows[h][0], v) <= rows[h][1]
        }
        working.append(h)
        remaining.remove(h)
        fresh = {
            point
            for point in _basic_points(rows, working[:-1], fixed = (h, ))
            if _feasible(rows, working, point)
        }
        vertices = kept | fresh
    logger.info('[n=%d, d=%d] Found %d vertices', system.dimension, d, len(vertices))
    return dto.VertexSet.create(system.dimension, (reduced.lift(v) for v in vertices))
