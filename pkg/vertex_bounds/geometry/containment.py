"""
Exact containment checks between polytopes, slab bodies and balls.
"""

import logging
from fractions import Fraction

from .. import dto, errors
from . import linalg
from .solver import ExactSimplexSolver


logger = logging.getLogger(__name__)


def contains_slab_body(outer, slabs):
    """
    Decides if the slab body ``{x : |<u_i, x>| <= bound_i}`` lies inside ``outer``.

    One linear program is solved per constraint of ``outer``. A slab body that
    is unbounded in the direction of an outer normal is not contained.

    Args:
        outer: A :py:class:`~..dto.HalfspaceSystem`.
        slabs: A :py:class:`~..dto.SlabSystem`, or an iterable of ``(u, bound)``
               pairs.

    Returns:
        ``True`` if the slab body is contained in ``outer``.
    """
    if isinstance(slabs, dto.SlabSystem):
        body = slabs.as_system()
    else:
        body = dto.HalfspaceSystem.from_slabs(slabs)
    if body.dimension != outer.dimension:
        raise errors.BadInputError('Slab body and outer polytope have different dimensions.')
    solver = ExactSimplexSolver(body)
    basis = None
    for index, constraint in enumerate(outer.constraints):
        try:
            result = solver.maximize(constraint.normal, start = basis)
        except errors.UnboundedError:
            logger.debug('Slab body is unbounded along the normal of constraint %d', index)
            return False
        basis = result.basis
        if result.value > constraint.offset:
            logger.debug('Constraint %d is exceeded by %s', index, result.value - constraint.offset)
            return False
    return True


def circumradius_ok(vertices, beta, dimension = None):
    """
    Indicates if every point satisfies ``||v||^2 <= beta^2 n`` exactly.

    Args:
        vertices: A nonempty :py:class:`~..dto.VertexSet`.
        beta: The rational radius ratio.
        dimension: The ``n`` in the bound, defaulting to the ambient dimension.
    """
    if not vertices.points:
        raise errors.BadInputError('Vertex set must be nonempty.')
    n = vertices.dimension if dimension is None else dimension
    bound = Fraction(beta) ** 2 * n
    return all(norm <= bound for norm in vertices.squared_norms())


def contains_unit_ball(system):
    """
    Indicates if the unit ball lies inside the system, i.e. ``offset >= ||normal||``
    for every constraint, compared exactly through squares.
    """
    return all(
        c.offset >= 0 and c.offset * c.offset >= linalg.dot(c.normal, c.normal)
        for c in system.constraints
    )
