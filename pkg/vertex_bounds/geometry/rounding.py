"""
Rounding of centrally symmetric polytopes.

The inscribed ellipsoid is the polar of the minimum volume ellipsoid around
the points ``a_i / b_i``, which Khachiyan's barycentric iteration computes in
floating point. The resulting map is then rationalised and both of its
guarantees are certified exactly.
"""

import logging
import math
from fractions import Fraction

import numpy as np
import scipy.linalg

from .. import dto, errors, numeric
from ..settings import toolkit_settings
from . import linalg
from .containment import contains_unit_ball


logger = logging.getLogger(__name__)


#: Denominator bound used when rationalising the floating point transform
RATIONAL_DENOMINATOR = 2 ** 40


def _check_symmetric(system):
    if not system.pairs or not system.is_centrally_symmetric():
        raise errors.NotCentrallySymmetricError(
            'Every constraint must belong to exactly one explicit slab pair.'
        )
    if any(system.constraints[i].offset <= 0 for i, _ in system.pairs):
        raise errors.NotFullDimensionalError('Slab offsets must be positive.')
    if linalg.rank([system.constraints[i].normal for i, _ in system.pairs]) < system.dimension:
        raise errors.NotFullDimensionalError('Slab normals must span the space.')


def _step_size(kappa, n):
    # Exact line search along p_j for log det((1 - s) M + s p_j p_j^T)
    return (kappa - n) / (n * (kappa - 1))


def khachiyan_weights(points, tolerance, max_iterations):
    """
    Runs Khachiyan's iteration, with drop steps, for the minimum volume
    ellipsoid around the symmetric point set ``{+p_i, -p_i}``.

    Each step either moves weight towards the point with the largest
    ``kappa_i = p_i^T M^{-1} p_i`` or away from the supported point with the
    smallest one, whichever is further from ``n``. The iteration stops when
    ``max_i kappa_i <= n (1 + tolerance)`` or when a full step changes
    ``log det M`` by at most ``tolerance`` relative to its size.

    Args:
        points: A ``(m, n)`` float array.
        tolerance: The relative volume tolerance.
        max_iterations: The iteration cap.

    Returns:
        A ``(weights, kappa)`` tuple, where ``M = sum_i weights_i p_i p_i^T`` and
        ``kappa`` is the final maximum of ``p_i^T M^{-1} p_i``.

    Raises:
        ConvergenceError: If the cap is reached first.
    """
    m, n = points.shape
    weights = np.full(m, 1.0 / m)
    moment = points.T @ (weights[:, None] * points)
    log_det = np.linalg.slogdet(moment)[1]
    for iteration in range(max_iterations):
        kappas = np.einsum('ij,ij->i', points @ np.linalg.inv(moment), points)
        j = int(np.argmax(kappas))
        kappa = kappas[j]
        if kappa <= n * (1 + tolerance):
            logger.debug('Khachiyan iteration closed the gap after %d steps', iteration)
            return weights, kappa
        supported = np.flatnonzero(weights > 0)
        k = int(supported[np.argmin(kappas[supported])])
        full_step = True
        if n - kappas[k] > kappa - n and weights[k] < 1:
            j = k
            limit = -weights[k] / (1 - weights[k])
            if kappas[k] > 1:
                step = max(_step_size(kappas[k], n), limit)
            else:
                step = limit
            # A drop step removes the point and may change the volume by little
            full_step = step > limit
        else:
            step = _step_size(kappa, n)
        weights *= 1 - step
        weights[j] = max(weights[j] + step, 0.0)
        moment = points.T @ (weights[:, None] * points)
        previous, log_det = log_det, np.linalg.slogdet(moment)[1]
        if full_step and abs(log_det - previous) <= tolerance * max(1.0, abs(previous)):
            kappa = np.max(np.einsum('ij,ij->i', points @ np.linalg.inv(moment), points))
            logger.debug('Khachiyan iteration reached the volume tolerance after %d steps', iteration)
            return weights, kappa
    raise errors.ConvergenceError(
        'Ellipsoid iteration did not converge in {} steps.'.format(max_iterations),
        tolerance
    )


def _rationalise(matrix):
    return tuple(
        tuple(Fraction(float(x)).limit_denominator(RATIONAL_DENOMINATOR) for x in row)
        for row in matrix
    )


def _transformed(system, inverse):
    """
    Returns the system ``a T^{-1} y <= b`` in the coordinates ``y = T x``.
    """
    return system._replace(
        constraints = tuple(
            dto.Constraint(linalg.vecmat(c.normal, inverse), c.offset)
            for c in system.constraints
        )
    )


def _radius_certified(system, weights, radius_squared):
    """
    Certifies ``||y|| <= radius`` on the system exactly.

    Every feasible ``y`` satisfies ``|<p_i, y>| <= 1`` for ``p_i = a_i / b_i``, so
    ``y^T M y <= sum_i w_i`` for any nonnegative weights. The bound follows when
    ``M - (sum_i w_i / radius^2) I`` is positive semidefinite.
    """
    n = system.dimension
    points = []
    for i, _ in system.pairs:
        c = system.constraints[i]
        points.append(tuple(x / c.offset for x in c.normal))
    total = sum(weights, Fraction(0))
    shift = total / radius_squared
    moment = [
        [
            sum((w * p[r] * p[s] for w, p in zip(weights, points)), Fraction(0)) - (shift if r == s else 0)
            for s in range(n)
        ]
        for r in range(n)
    ]
    return linalg.is_positive_semidefinite(moment)


def round_polytope(system):
    """
    Maps a centrally symmetric polytope to one that contains the unit ball and
    lies in the ball of radius ``ratio sqrt(n)``, where the certified ``ratio``
    is recorded on the transform and approaches 1 as the ellipsoid converges.

    Args:
        system: A bounded :py:class:`~..dto.HalfspaceSystem` whose constraints
                are covered by explicit slab pairs.

    Returns:
        A ``(transform, rounded)`` tuple of a :py:class:`~..dto.RoundingTransform`
        and the image of ``system`` under it.

    Raises:
        NotCentrallySymmetricError: If the constraints are not all paired.
        NotFullDimensionalError: If the polytope has no interior.
        ConvergenceError: If the ellipsoid iteration or its certification fails.
    """
    _check_symmetric(system)
    n = system.dimension
    tolerance = toolkit_settings.ROUNDING_TOLERANCE
    points = np.array([
        [float(x / system.constraints[i].offset) for x in system.constraints[i].normal]
        for i, _ in system.pairs
    ])
    weights, kappa = khachiyan_weights(
        points,
        tolerance,
        toolkit_settings.ROUNDING_MAX_ITERATIONS
    )
    moment = points.T @ (weights[:, None] * points)
    # With Q = L L^T the inscribed ellipsoid {x^T Q x <= 1} maps to the unit ball under L^T
    lower = scipy.linalg.cholesky(kappa * moment, lower = True)
    matrix = _rationalise(lower.T)
    try:
        inverse = linalg.inverse(matrix)
    except errors.ComputationError:
        raise errors.ConvergenceError('Rounding transform is singular.', tolerance)
    rounded = _transformed(system, inverse)
    factor = Fraction(1)
    if not contains_unit_ball(rounded):
        worst = max(
            linalg.dot(c.normal, c.normal) / (c.offset * c.offset)
            for c in rounded.constraints
        )
        factor = numeric.sqrt_upper(worst)
        logger.info('[n=%d] Rescaling the rounding transform by %s', n, float(factor))
        matrix = tuple(tuple(x * factor for x in row) for row in matrix)
        inverse = tuple(tuple(x / factor for x in row) for row in inverse)
        rounded = _transformed(system, inverse)
    # Feasible points satisfy ||T x||^2 <= kappa, up to the rescaling and rationalisation
    radius_squared = Fraction(float(kappa)) * (1 + Fraction(tolerance)) * factor * factor
    ratio = numeric.sqrt_upper(radius_squared / n)
    ratio = Fraction(math.ceil(ratio * RATIONAL_DENOMINATOR), RATIONAL_DENOMINATOR)
    exact_weights = [Fraction(float(w)).limit_denominator(RATIONAL_DENOMINATOR) for w in weights]
    if not contains_unit_ball(rounded) or not _radius_certified(rounded, exact_weights, ratio * ratio * n):
        raise errors.ConvergenceError(
            'Rounded polytope could not be certified at tolerance {}.'.format(tolerance),
            tolerance
        )
    logger.info(
        '[n=%d] Rounded a polytope with %d slab pairs, radius ratio %s',
        n, len(system.pairs), float(ratio)
    )
    transform = dto.RoundingTransform(
        matrix,
        inverse,
        tuple(Fraction(0) for _ in range(n)),
        dto.Ellipsoid(
            tuple(Fraction(0) for _ in range(n)),
            linalg.matmul(linalg.transpose(matrix), matrix)
        ),
        ratio
    )
    return transform, rounded
