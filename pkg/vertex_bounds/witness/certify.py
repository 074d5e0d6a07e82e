"""
Randomized lower bounds on vertex counts.

Each trial maximises an independent Gaussian objective over the polytope and
records the optimal vertex after verifying it exactly. The distinct vertices
found are a certified lower bound on the vertex count.
"""

import logging
import math

import mpmath
import numpy as np

from .. import constants, dto, errors, numeric
from ..geometry.containment import circumradius_ok
from ..geometry.solver import ExactSimplexSolver
from ..geometry.vertices import is_full_dimensional, verify_vertex
from ..settings import toolkit_settings
from .bounds import standard_error
from .sampling import quantize, sample_gaussian, trial_generator


logger = logging.getLogger(__name__)


#: Cap applied by :py:func:`default_trials`
MAX_DEFAULT_TRIALS = 10 ** 6


def default_trials(n):
    """
    Returns ``max(10^4, 4 * 2^n * ln(2^n))`` capped at :py:data:`MAX_DEFAULT_TRIALS`.
    """
    if n >= 20:
        return MAX_DEFAULT_TRIALS
    return min(max(10 ** 4, int(math.ceil(4 * 2 ** n * n * math.log(2)))), MAX_DEFAULT_TRIALS)


def threshold(n, epsilon, rho):
    """
    Returns the success threshold ``tau = (1 - epsilon) n / rho``.
    """
    return (1 - float(epsilon)) * n / float(rho)


def success_rate_bound(alpha, n, rho, epsilon = None):
    """
    Returns ``(1 - exp(-rho^2 / 2))^(alpha n) / 2``, the lower bound on the
    probability that the maximum of a Gaussian objective reaches the threshold.

    Args:
        alpha: The slab ratio.
        n: The dimension.
        rho: The slab width.
        epsilon: The ``epsilon`` the width condition is checked for. When
                 omitted, ``rho`` must satisfy it for some ``epsilon < 1``.

    Raises:
        Rho221ViolatedError: If the width condition fails.
    """
    if epsilon is not None:
        satisfied = constants.check_221(alpha, epsilon, rho)
    else:
        satisfied = constants.epsilon_floor(alpha, rho) < 1
    if not satisfied:
        raise errors.Rho221ViolatedError(
            'rho = {} violates the width condition for alpha = {}, epsilon = {}.'.format(
                rho, alpha, epsilon if epsilon is not None else 'any'
            )
        )
    with numeric.precision():
        rho = numeric.to_mpf(rho)
        mass = -mpmath.expm1(-rho * rho / 2)
        return float(mass ** (numeric.to_mpf(alpha) * n) / 2)


def union_bound_check(vertices, beta, tau, n):
    """
    Returns ``(|W| / 2) exp(-tau^2 / (2 beta^2 n))``, an upper bound on the
    probability that the maximum of a Gaussian objective over ``W`` reaches ``tau``.

    Raises:
        CircumradiusViolatedError: If some vertex lies outside the ball of radius
                                   ``beta sqrt(n)``.
    """
    if not circumradius_ok(vertices, beta, n):
        raise errors.CircumradiusViolatedError(
            'Some vertex lies outside the ball of radius beta sqrt(n).'
        )
    with numeric.precision():
        beta, tau = numeric.to_mpf(beta), numeric.to_mpf(tau)
        return float(len(vertices) * mpmath.exp(-tau * tau / (2 * beta * beta * n)) / 2)


def certify_vertex_count(system, trials, seed, tau = None, params = None, known_vertices = None):
    """
    Collects distinct vertices as the maximisers of seeded Gaussian objectives.

    Each objective is rounded to a dyadic rational and solved exactly, warm
    started from the best vertex found so far. Every recorded vertex is
    re-verified against the full system.

    Args:
        system: A bounded, full-dimensional :py:class:`~..dto.HalfspaceSystem`.
        trials: The number of objectives.
        seed: The seed of the run.
        tau: The success threshold. Derived from ``params`` when omitted.
        params: Optional :py:class:`~..dto.GammaParams` (or any object with
                ``alpha``, ``beta``, ``epsilon`` and ``rho``) enabling the
                theoretical lower rate and the union bound.
        known_vertices: Optional complete :py:class:`~..dto.VertexSet` used for the
                        union bound instead of the vertices found.

    Returns:
        A :py:class:`~..dto.WitnessReport`.

    Raises:
        NotFullDimensionalError: If the system has no interior point.
        UnboundedPolyhedronError: If the system is unbounded.
    """
    n = system.dimension
    if trials < 1:
        raise errors.BadInputError('At least one trial is required.')
    if not is_full_dimensional(system):
        raise errors.NotFullDimensionalError('Polytope must be full-dimensional.')
    if tau is None and params is not None:
        tau = threshold(n, params.epsilon, params.rho)
    solver = ExactSimplexSolver(system)
    # Maps each verified vertex to a basis it was found with
    found = {}
    cache = []
    successes = 0
    skipped = 0
    for trial in range(trials):
        y = sample_gaussian(n, trial_generator(seed, trial))
        objective = quantize(y)
        start = None
        if cache:
            start = found[cache[int(np.argmax(cache_points @ y))]]
        try:
            result = solver.maximize(objective, start = start)
        except errors.UnboundedError:
            raise errors.UnboundedPolyhedronError('Polytope is unbounded.')
        point = result.point
        # Success is judged on the objective that was actually solved
        if tau is not None and float(sum(a * x for a, x in zip(objective, point))) >= tau:
            successes += 1
        if point in found:
            continue
        if result.is_vertex and verify_vertex(system, point):
            found[point] = result.basis
            cache.append(point)
            cache_points = np.array([[float(x) for x in p] for p in cache])
            logger.debug('[seed=%s] Trial %d found vertex %d', seed, trial, len(found))
        else:
            skipped += 1
    if skipped:
        logger.warning('[seed=%s] Skipped %d trials with a non-vertex optimum', seed, skipped)
    vertices = dto.VertexSet.create(n, found)
    rate = sigma = lower = union = sandwich = None
    if tau is not None:
        rate = successes / trials
        sigma = standard_error(rate, trials)
    if params is not None:
        lower = success_rate_bound(params.alpha, n, params.rho, epsilon = params.epsilon)
        union = union_bound_check(
            known_vertices if known_vertices is not None else vertices,
            params.beta,
            tau,
            n
        )
        slack = toolkit_settings.SIGMA_SLACK * sigma
        sandwich = lower - slack <= rate <= union + slack
        if not sandwich:
            logger.warning(
                '[seed=%s] Success rate %s outside [%s, %s] at n = %d',
                seed, rate, lower, union, n
            )
    logger.info('[seed=%s] %d distinct vertices in %d trials', seed, len(vertices), trials)
    return dto.WitnessReport(
        seed, trials, tau, len(vertices), vertices, rate, lower, union, sigma, skipped, sandwich
    )
