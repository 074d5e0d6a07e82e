"""
Regularity, the cut condition and exhaustive enumeration of r-factors.
"""

import logging
from fractions import Fraction

import numpy as np

from .. import constants, dto, errors
from ..settings import toolkit_settings


logger = logging.getLogger(__name__)


def check_regular(graph, k):
    """
    Indicates if every vertex has degree exactly ``k``.
    """
    return all(d == k for d in graph.degrees())


def factor_instance(graph, k, r):
    """
    Returns a :py:class:`~..dto.FactorInstance` after checking its invariants.

    Raises:
        RegularityError: If the graph is not ``k``-regular.
        DegreeConditionError: Unless ``k >= 2r + 1``.
        ParityError: If ``r |V|`` is odd.
    """
    if not check_regular(graph, k):
        raise errors.RegularityError('Graph is not {}-regular.'.format(k))
    epsilon = constants.epsilon_kr(k, r)
    if r * graph.vertex_count % 2:
        raise errors.ParityError('r |V| must be even for an r-factor to exist.')
    a = tuple(Fraction(r, k) for _ in graph.edges)
    return dto.FactorInstance(graph, k, r, a, epsilon)


def _cut_sizes(graph, masks):
    sizes = np.zeros(masks.shape, dtype = np.int64)
    for u, v in graph.edges:
        sizes += ((masks >> u) ^ (masks >> v)) & 1
    return sizes


def _popcount(masks, bits):
    counts = np.zeros(masks.shape, dtype = np.int64)
    for i in range(bits):
        counts += (masks >> i) & 1
    return counts


def minimum_cut(graph, min_size = 2):
    """
    Returns the smallest cut ``delta(U)`` over ``min_size <= |U| <= |V| - min_size``,
    scanning every ``U`` that contains vertex 0 (so each cut once up to
    complementation). Ties go to the first ``U`` in bitmask order.

    Returns:
        A :py:class:`~..dto.CutWitness`, or ``None`` if no ``U`` is in range.

    Raises:
        TooLargeError: If ``|V|`` exceeds ``EXHAUSTIVE_CUT_MAX_VERTICES``.
    """
    n = graph.vertex_count
    if n > toolkit_settings.EXHAUSTIVE_CUT_MAX_VERTICES:
        raise errors.TooLargeError(
            'Exhaustive cut scan is limited to {} vertices.'.format(
                toolkit_settings.EXHAUSTIVE_CUT_MAX_VERTICES
            )
        )
    if n < 2 * min_size:
        return None
    best_size, best_mask = None, None
    chunk = 1 << 20
    # Masks over vertices 1 .. n-1; vertex 0 is always in U
    total = 1 << (n - 1)
    for start in range(0, total, chunk):
        rest = np.arange(start, min(start + chunk, total), dtype = np.int64)
        masks = (rest << 1) | 1
        sizes = _popcount(masks, n)
        valid = (sizes >= min_size) & (sizes <= n - min_size)
        if not valid.any():
            continue
        cuts = np.where(valid, _cut_sizes(graph, masks), np.iinfo(np.int64).max)
        index = int(np.argmin(cuts))
        if best_size is None or cuts[index] < best_size:
            best_size, best_mask = int(cuts[index]), int(masks[index])
    vertices = tuple(v for v in range(n) if best_mask >> v & 1)
    return dto.CutWitness(vertices, best_size)


def check_cut_condition(graph, k, r):
    """
    Checks that ``r |delta(U)| > k`` for every ``U`` with ``2 <= |U| <= |V| - 2``.

    Returns:
        A ``(ok, worst)`` tuple, where ``worst`` is the smallest cut as a
        :py:class:`~..dto.CutWitness` when the condition fails and ``None``
        otherwise.

    Raises:
        RegularityError: If the graph is not ``k``-regular.
        TooLargeError: If the graph is too large for an exhaustive scan.
    """
    if not check_regular(graph, k):
        raise errors.RegularityError('Graph is not {}-regular.'.format(k))
    worst = minimum_cut(graph)
    if worst is None or r * worst.size > k:
        return True, None
    logger.info(
        '[%s] Cut condition fails for U = %s with %d edges',
        graph.name, worst.vertices, worst.size
    )
    return False, worst


def enumerate_r_factors(graph, r):
    """
    Returns every set of edges meeting each vertex exactly ``r`` times.

    Edges are decided in index order; a branch is abandoned as soon as some
    vertex cannot reach degree ``r`` with its undecided edges.

    Returns:
        A sorted list of sorted tuples of edge indices.

    Raises:
        ParityError: If ``r |V|`` is odd.
        TooLargeError: If the graph has more than ``FACTOR_MAX_EDGES`` edges.
    """
    if r * graph.vertex_count % 2:
        raise errors.ParityError('r |V| must be even for an r-factor to exist.')
    if len(graph.edges) > toolkit_settings.FACTOR_MAX_EDGES:
        raise errors.TooLargeError(
            'Factor enumeration is limited to {} edges.'.format(toolkit_settings.FACTOR_MAX_EDGES)
        )
    need = [r] * graph.vertex_count
    available = list(graph.degrees())
    if any(d < r for d in available):
        return []
    chosen = []
    factors = []

    def extend(index):
        if index == len(graph.edges):
            if not any(need):
                factors.append(tuple(chosen))
            return
        u, v = graph.edges[index]
        available[u] -= 1
        available[v] -= 1
        if need[u] and need[v]:
            need[u] -= 1
            need[v] -= 1
            chosen.append(index)
            if need[u] <= available[u] and need[v] <= available[v]:
                extend(index + 1)
            chosen.pop()
            need[u] += 1
            need[v] += 1
        if need[u] <= available[u] and need[v] <= available[v]:
            extend(index + 1)
        available[u] += 1
        available[v] += 1

    extend(0)
    logger.info('[%s] Found %d %d-factors', graph.name, len(factors), r)
    return sorted(factors)
