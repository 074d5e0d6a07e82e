"""
The r-factor polytope: box, degree and blossom constraints, separation of
the blossom constraints and the deep point check.
"""

import itertools
import logging
from fractions import Fraction

from .. import dto, errors
from ..settings import toolkit_settings
from .factors import check_cut_condition


logger = logging.getLogger(__name__)


def _check_size(graph):
    if graph.vertex_count > toolkit_settings.POLYTOPE_MAX_VERTICES:
        raise errors.TooLargeError(
            'Blossom constraints are only enumerated up to {} vertices.'.format(
                toolkit_settings.POLYTOPE_MAX_VERTICES
            )
        )


def vertex_subsets(graph, min_size = 1):
    """
    Yields one of ``U`` and ``V - U`` for every ``U`` with
    ``min_size <= |U| <= |V| - min_size``: sets smaller than ``|V| / 2``, and
    sets of exactly half the vertices only when they contain vertex 0.
    """
    n = graph.vertex_count
    for size in range(min_size, n // 2 + 1):
        for subset in itertools.combinations(range(n), size):
            if 2 * size == n and subset[0] != 0:
                continue
            yield subset


def build_factor_polytope(graph, r):
    """
    Returns the H-description of the ``r``-factor polytope in ``R^E``.

    The rows are the box constraints ``0 <= x(e) <= 1``, the degree equations
    as explicit equality pairs, and the blossom constraints
    ``sum_{delta(U) - F} x(e) - sum_F x(e) >= 1 - |F|`` for ``F`` in ``delta(U)``
    with ``r |U| + |F|`` odd. ``U`` and ``V - U`` give the same constraints, so
    only one of them is used.

    Raises:
        TooLargeError: If ``|V|`` exceeds ``POLYTOPE_MAX_VERTICES``.
        EmptyPolyhedronError: If an empty cut makes a blossom constraint unsatisfiable.
    """
    _check_size(graph)
    m = len(graph.edges)
    unit = lambda e, s: tuple(Fraction(s) if i == e else Fraction(0) for i in range(m))
    rows = []
    for e in range(m):
        rows.append((unit(e, -1), Fraction(0)))
        rows.append((unit(e, 1), Fraction(1)))
    equalities = []
    for v, incident in enumerate(graph.incident_edges()):
        if not incident:
            raise errors.EmptyPolyhedronError('Vertex {} has no edges.'.format(v))
        normal = graph.indicator(incident)
        equalities.append((len(rows), len(rows) + 1))
        rows.append((normal, Fraction(r)))
        rows.append((tuple(-x for x in normal), Fraction(-r)))
    base = dto.HalfspaceSystem.create(m, rows, equalities = equalities)
    seen = set(rows)
    blossoms = []
    for subset in vertex_subsets(graph):
        cut = graph.cut(subset)
        if not cut:
            if r * len(subset) % 2:
                raise errors.EmptyPolyhedronError(
                    'Empty cut for U = {} with r |U| odd.'.format(subset)
                )
            continue
        for size in range(len(cut) + 1):
            if (r * len(subset) + size) % 2 == 0:
                continue
            for odd in itertools.combinations(cut, size):
                row = dto.BlossomConstraint(subset, odd, cut, None).constraint(m)
                if row not in seen:
                    seen.add(row)
                    blossoms.append(row)
    logger.info(
        '[%s] Factor polytope with %d blossom constraints over %d edges',
        graph.name, len(blossoms), m
    )
    return base.with_constraints(blossoms)


def _check_point(instance, x):
    graph = instance.graph
    if len(x) != len(graph.edges):
        raise errors.PreconditionViolatedError('Point has the wrong length.')
    if any(not 0 <= value <= 1 for value in x):
        raise errors.PreconditionViolatedError('Point violates 0 <= x(e) <= 1.')
    for v, incident in enumerate(graph.incident_edges()):
        if sum(x[e] for e in incident) != instance.r:
            raise errors.PreconditionViolatedError(
                'Point violates the degree equation at vertex {}.'.format(v)
            )


def blossom_violation(instance, x):
    """
    Returns the most violated blossom constraint at ``x``, or ``None``.

    For a fixed ``U`` the left side minus ``1 - |F|`` equals
    ``sum_{delta(U) - F} x(e) + sum_F (1 - x(e)) - 1``, which is minimised by
    putting into ``F`` every edge with ``x(e) > 1/2`` and, if the parity is
    wrong, toggling the edge with ``x(e)`` closest to ``1/2``.

    Args:
        instance: A :py:class:`~..dto.FactorInstance`.
        x: A rational point satisfying the box and degree constraints.

    Returns:
        A :py:class:`~..dto.BlossomConstraint` with negative ``slack``, or ``None``.
    """
    graph = instance.graph
    _check_size(graph)
    x = tuple(Fraction(value) for value in x)
    _check_point(instance, x)
    worst = None
    for subset in vertex_subsets(graph):
        cut = graph.cut(subset)
        if not cut:
            continue
        odd = { e for e in cut if 2 * x[e] > 1 }
        if (instance.r * len(subset) + len(odd)) % 2 == 0:
            toggle = min(cut, key = lambda e: (abs(2 * x[e] - 1), e))
            odd ^= { toggle }
        slack = sum(1 - x[e] if e in odd else x[e] for e in cut) - 1
        if slack < 0 and (worst is None or slack < worst.slack):
            worst = dto.BlossomConstraint(subset, tuple(sorted(odd)), cut, slack)
    return worst


def deep_point_check(instance, y):
    """
    Checks that ``a + y`` lies in the ``r``-factor polytope.

    Two independent paths are evaluated. The fast path only checks the blossom
    constraints with ``F`` empty and ``2 <= |U| <= |V| - 2``, which suffices for
    perturbations inside the band. The slow path runs the full separation of
    :py:func:`blossom_violation`.

    Args:
        instance: A :py:class:`~..dto.FactorInstance`.
        y: A rational perturbation with zero degree sums and ``|y(e)| <= epsilon``.

    Returns:
        ``True`` if ``a + y`` is in the polytope.

    Raises:
        PreconditionViolatedError: If ``y`` leaves the band or changes a degree sum.
        CutConditionError: If the graph fails the cut condition.
        InconsistencyError: If the two paths disagree.
    """
    graph = instance.graph
    y = tuple(Fraction(value) for value in y)
    if len(y) != len(graph.edges):
        raise errors.PreconditionViolatedError('Perturbation has the wrong length.')
    if any(abs(value) > instance.epsilon for value in y):
        raise errors.PreconditionViolatedError(
            'Perturbation leaves the band |y(e)| <= {}.'.format(instance.epsilon)
        )
    for v, incident in enumerate(graph.incident_edges()):
        if sum(y[e] for e in incident) != 0:
            raise errors.PreconditionViolatedError(
                'Perturbation changes the degree sum at vertex {}.'.format(v)
            )
    ok, worst = check_cut_condition(graph, instance.k, instance.r)
    if not ok:
        raise errors.CutConditionError(
            'Cut condition fails for U = {} with {} edges.'.format(worst.vertices, worst.size)
        )
    x = tuple(a + b for a, b in zip(instance.a, y))
    fast = all(0 <= value <= 1 for value in x) and all(
        sum(x[e] for e in graph.cut(subset)) >= 1
        for subset in vertex_subsets(graph, min_size = 2)
        if instance.r * len(subset) % 2
    )
    slow = blossom_violation(instance, x) is None
    if fast != slow:
        raise errors.InconsistencyError(
            'Fast and full blossom checks disagree ({} against {}).'.format(fast, slow)
        )
    return fast
