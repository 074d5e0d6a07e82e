"""
The subspace ``L`` of edge weightings with zero degree sums, and the factor
polytope shifted by the deep point and expressed in coordinates of ``L``.
"""

import logging
from fractions import Fraction

import mpmath

from .. import dto, errors, numeric
from ..geometry import linalg
from ..settings import toolkit_settings
from ..witness.sampling import quantize
from .factors import enumerate_r_factors
from .polytope import build_factor_polytope


logger = logging.getLogger(__name__)


def incidence_rows(graph):
    return [graph.indicator(incident) for incident in graph.incident_edges()]


def _orthogonalise(vectors):
    """
    Exact Gram-Schmidt without normalisation.
    """
    result = []
    for vector in vectors:
        for other in result:
            coefficient = linalg.dot(vector, other) / linalg.dot(other, other)
            vector = tuple(a - coefficient * b for a, b in zip(vector, other))
        result.append(vector)
    return result


def build_subspace(graph):
    """
    Returns a basis of ``L`` and the projected edge vectors ``u_e``.

    The basis rows are exact rational multiples of an exactly orthogonal basis
    of the kernel of the incidence matrix, scaled to unit norm at the
    configured precision. They lie in ``L`` exactly.

    Returns:
        A :py:class:`~..dto.SubspaceL`.

    Raises:
        ComputationError: If some basis norm or some ``||u_e||`` exceeds 1 by more
                          than ``ORTHONORMAL_TOLERANCE``.
    """
    m = len(graph.edges)
    orthogonal = _orthogonalise(linalg.nullspace(incidence_rows(graph), m))
    tolerance = Fraction(toolkit_settings.ORTHONORMAL_TOLERANCE)
    basis = []
    with numeric.precision():
        for vector in orthogonal:
            scale = numeric.to_fraction(1 / mpmath.sqrt(numeric.to_mpf(linalg.dot(vector, vector))))
            row = tuple(x * scale for x in vector)
            if abs(linalg.dot(row, row) - 1) > tolerance:
                raise errors.ComputationError('Basis of L is not normalised within tolerance.')
            basis.append(row)
    projections = tuple(tuple(row[e] for row in basis) for e in range(m))
    for e, u in enumerate(projections):
        if linalg.dot(u, u) > 1 + tolerance:
            raise errors.ComputationError('Projection of edge {} has norm above 1.'.format(e))
    lower_bound = m - graph.vertex_count
    if len(basis) < lower_bound:
        raise errors.InconsistencyError('dim L is below |E| - |V|.')
    logger.info('[%s] dim L = %d (|E| - |V| = %d)', graph.name, len(basis), lower_bound)
    return dto.SubspaceL(tuple(basis), projections, len(basis), lower_bound)


def coordinates(subspace, vector):
    """
    Returns the exact coordinates ``z`` of a vector of ``L`` with respect to
    the basis, i.e. ``vector = sum_j z_j basis[j]``.
    """
    return tuple(
        linalg.dot(row, vector) / linalg.dot(row, row)
        for row in subspace.basis
    )


def reduce_to_L(instance, build_polytope = None):
    """
    Expresses ``P_r(G) - a`` in coordinates of ``L``.

    Args:
        instance: A :py:class:`~..dto.FactorInstance`.
        build_polytope: Whether to build the reduced H-description. Defaults to
                        building it when ``|V| <= PIPELINE_POLYTOPE_MAX_VERTICES``.

    Returns:
        A :py:class:`~..dto.ReducedFactorPolytope` whose vertices are the exact
        reduced factor indicators ``[H] - a`` and whose slabs are
        ``|<u_e, z>| <= epsilon``.
    """
    graph = instance.graph
    if build_polytope is None:
        build_polytope = graph.vertex_count <= toolkit_settings.PIPELINE_POLYTOPE_MAX_VERTICES
    subspace = build_subspace(graph)
    points = []
    for factor in enumerate_r_factors(graph, instance.r):
        shifted = tuple(h - a for h, a in zip(graph.indicator(factor), instance.a))
        points.append(coordinates(subspace, shifted))
    vertices = dto.VertexSet.create(subspace.dimension, points)
    slabs = dto.SlabSystem.create(
        subspace.projections,
        instance.epsilon,
        tolerance = toolkit_settings.ORTHONORMAL_TOLERANCE
    )
    system = None
    if build_polytope:
        full = build_factor_polytope(graph, instance.r)
        rows = []
        for constraint in full.constraints:
            normal = tuple(linalg.dot(row, constraint.normal) for row in subspace.basis)
            offset = constraint.offset - linalg.dot(constraint.normal, instance.a)
            if any(normal):
                rows.append((normal, offset))
            elif offset < 0:
                raise errors.EmptyPolyhedronError('Reduced factor polytope is empty.')
        system = dto.HalfspaceSystem.create(subspace.dimension, rows)
    return dto.ReducedFactorPolytope(instance, subspace, system, slabs, vertices)


def random_admissible_perturbation(instance, generator):
    """
    Draws a rational ``y`` in ``L`` with ``|y(e)| <= epsilon`` for every edge.

    A Gaussian combination of the exact kernel basis is scaled so that its
    largest entry is a uniformly drawn fraction of ``epsilon``.

    Args:
        instance: A :py:class:`~..dto.FactorInstance`.
        generator: A ``numpy.random.Generator``.
    """
    graph = instance.graph
    m = len(graph.edges)
    kernel = linalg.nullspace(incidence_rows(graph), m)
    if not kernel:
        return tuple(Fraction(0) for _ in range(m))
    weights = quantize(generator.standard_normal(len(kernel)))
    y = tuple(
        sum((w * z[e] for w, z in zip(weights, kernel)), Fraction(0))
        for e in range(m)
    )
    largest = max(abs(value) for value in y)
    if largest == 0:
        return y
    fraction = quantize([generator.uniform(0.0, 1.0)])[0]
    scale = instance.epsilon * fraction / largest
    return tuple(value * scale for value in y)
