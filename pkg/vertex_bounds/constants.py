"""
Evaluation and optimisation of the constants of the vertex count bound.

All transcendental values are evaluated with mpmath at
``PRECISION_DIGITS`` decimal digits. The optimiser searches a fixed numpy
grid and refines coordinate-wise with scipy, so it is deterministic.
"""

import logging
import math
from fractions import Fraction

import mpmath
import numpy as np
from scipy import optimize

from . import dto, errors, numeric
from .settings import toolkit_settings


logger = logging.getLogger(__name__)


#: Exponent formulas understood by :py:func:`gamma_value`
GAMMA_VARIANTS = ('printed', 'derived')

#: Radius bounds understood by :py:func:`corollary13_constants`
RADIUS_VARIANTS = ('triangle', 'orthogonal')


def _check_variant(variant, allowed):
    if variant not in allowed:
        raise errors.BadInputError(
            'Unknown variant {!r}; expected one of {}.'.format(variant, ', '.join(allowed))
        )


def _check_parameters(alpha, beta = 1, epsilon = None, rho = None):
    if alpha < 1:
        raise errors.BadInputError('alpha must be at least 1.')
    if beta < 1:
        raise errors.BadInputError('beta must be at least 1.')
    if epsilon is not None and not 0 < epsilon < 1:
        raise errors.BadInputError('epsilon must lie in (0, 1).')
    if rho is not None and rho <= 0:
        raise errors.BadInputError('rho must be positive.')


def _log_slab_mass(rho):
    # ln(1 - exp(-rho^2 / 2))
    return mpmath.log1p(-mpmath.exp(-rho * rho / 2))


def check_221(alpha, epsilon, rho):
    """
    Indicates if ``alpha ln(1 - exp(-rho^2/2)) > -epsilon^2 / 4``.
    """
    _check_parameters(alpha, epsilon = epsilon, rho = rho)
    with numeric.precision():
        alpha, epsilon, rho = (numeric.to_mpf(x) for x in (alpha, epsilon, rho))
        return bool(alpha * _log_slab_mass(rho) > -epsilon * epsilon / 4)


def epsilon_floor(alpha, rho):
    """
    Returns ``2 sqrt(-alpha ln(1 - exp(-rho^2/2)))``, the infimum of the
    ``epsilon`` for which :py:func:`check_221` holds at ``(alpha, rho)``.
    """
    _check_parameters(alpha, rho = rho)
    with numeric.precision():
        alpha, rho = numeric.to_mpf(alpha), numeric.to_mpf(rho)
        return 2 * mpmath.sqrt(-alpha * _log_slab_mass(rho))


def gamma_value(alpha, beta, epsilon, rho, variant = 'printed'):
    """
    Evaluates the vertex count exponent for a parameter choice.

    The ``printed`` variant is
    ``(1 - eps)^2 / (2 beta^2 rho^2) (1 - exp(-rho^2/2)) + alpha ln(1 - exp(-rho^2/2))``;
    the ``derived`` variant omits the factor ``1 - exp(-rho^2/2)`` from the first term.

    Args:
        alpha: The slab ratio, at least 1.
        beta: The circumradius ratio, at least 1.
        epsilon: A number in ``(0, 1)``.
        rho: A positive slab width.
        variant: One of :py:data:`GAMMA_VARIANTS`.

    Returns:
        The exponent as an ``mpf``; it is admissible when positive.

    Raises:
        Infeasible221Error: If :py:func:`check_221` fails for the parameters.
    """
    _check_variant(variant, GAMMA_VARIANTS)
    _check_parameters(alpha, beta, epsilon, rho)
    if not check_221(alpha, epsilon, rho):
        raise errors.Infeasible221Error(
            'rho = {} is too small for alpha = {} and epsilon = {}.'.format(rho, alpha, epsilon)
        )
    with numeric.precision():
        alpha, beta, epsilon, rho = (numeric.to_mpf(x) for x in (alpha, beta, epsilon, rho))
        log_mass = _log_slab_mass(rho)
        first = (1 - epsilon) ** 2 / (2 * beta * beta * rho * rho)
        if variant == 'printed':
            first *= -mpmath.expm1(-rho * rho / 2)
        return first + alpha * log_mass


def _gamma_grid(alpha, beta, epsilon, rho, variant):
    """
    Float evaluation of the exponent on broadcast arrays; infeasible points
    evaluate to ``-inf``.
    """
    with np.errstate(divide = 'ignore'):
        log_mass = np.log1p(-np.exp(-rho * rho / 2))
    first = (1 - epsilon) ** 2 / (2 * beta * beta * rho * rho)
    if variant == 'printed':
        first = first * -np.expm1(-rho * rho / 2)
    gamma = first + alpha * log_mass
    feasible = alpha * log_mass > -epsilon * epsilon / 4
    return np.where(feasible, gamma, -np.inf)


def _refine(objective, centre, lower, upper):
    """
    Minimises ``objective`` near ``centre`` within ``(lower, upper)``.
    """
    tolerance = toolkit_settings.REFINE_TOLERANCE
    try:
        result = optimize.minimize_scalar(
            objective,
            bracket = (lower, centre, upper),
            method = 'golden',
            tol = tolerance
        )
        if lower < result.x < upper:
            return result.x
    except ValueError:
        pass
    result = optimize.minimize_scalar(
        objective,
        bounds = (lower, upper),
        method = 'bounded',
        options = { 'xatol': tolerance * max(abs(centre), 1e-12) }
    )
    return result.x


def gamma_of(alpha, beta, variant = 'printed'):
    """
    Finds the admissible parameters maximising the exponent for ``(alpha, beta)``.

    A grid over ``epsilon`` and a logarithmic grid over ``rho`` locate the best
    feasible point, which is then refined coordinate-wise with golden-section
    search. Ties on the grid go to the smallest ``epsilon``, then the smallest
    ``rho``.

    Returns:
        A :py:class:`~.dto.GammaParams`.

    Raises:
        NoFeasiblePointError: If no positive exponent is found.
    """
    _check_variant(variant, GAMMA_VARIANTS)
    _check_parameters(alpha, beta)
    a, b = float(alpha), float(beta)
    step = toolkit_settings.EPSILON_STEP
    epsilons = np.arange(1, int(round(1 / step))) * step
    rhos = np.logspace(
        toolkit_settings.RHO_MIN_EXPONENT,
        toolkit_settings.RHO_MAX_EXPONENT,
        toolkit_settings.RHO_GRID_POINTS,
        base = 2.0
    )
    grid = _gamma_grid(a, b, epsilons[:, None], rhos[None, :], variant)
    index = np.unravel_index(np.argmax(grid), grid.shape)
    if not np.isfinite(grid[index]) or grid[index] <= 0:
        raise errors.NoFeasiblePointError(
            'No admissible parameters for alpha = {}, beta = {}.'.format(alpha, beta)
        )
    epsilon, rho = float(epsilons[index[0]]), float(rhos[index[1]])
    best = float(grid[index])
    ratio = float(rhos[1] / rhos[0])

    def value(e, r):
        if not 0 < e < 1 or r <= 0:
            return -np.inf
        return float(_gamma_grid(a, b, e, r, variant))

    for _ in range(toolkit_settings.REFINE_ROUNDS):
        previous = best
        e = _refine(
            lambda x: -value(x, rho) if np.isfinite(value(x, rho)) else 1e300,
            epsilon,
            max(epsilon - step, step / 2),
            min(epsilon + step, 1 - step / 2)
        )
        if value(e, rho) > best:
            epsilon, best = e, value(e, rho)
        r = _refine(
            lambda x: -value(epsilon, x) if np.isfinite(value(epsilon, x)) else 1e300,
            rho,
            rho / ratio,
            rho * ratio
        )
        if value(epsilon, r) > best:
            rho, best = r, value(epsilon, r)
        if best - previous <= toolkit_settings.REFINE_TOLERANCE * abs(best):
            break
    try:
        gamma = gamma_value(alpha, beta, epsilon, rho, variant)
    except errors.Infeasible221Error:
        gamma = mpmath.mpf(0)
    if gamma <= 0:
        raise errors.NoFeasiblePointError(
            'No admissible parameters for alpha = {}, beta = {}.'.format(alpha, beta)
        )
    logger.info(
        '[alpha=%s, beta=%s] gamma = %s at epsilon = %s, rho = %s',
        alpha, beta, float(gamma), epsilon, rho
    )
    return dto.GammaParams(alpha, beta, epsilon, rho, float(gamma), variant)


def epsilon_kr(k, r):
    """
    Returns the exact band width ``min(r/k - 1/ceil((k+1)/r), 1/(2k))``.

    Raises:
        DegreeConditionError: Unless ``r >= 1`` and ``k >= 2r + 1``.
    """
    if r < 1 or k < 2 * r + 1:
        raise errors.DegreeConditionError(
            'Need r >= 1 and k >= 2r + 1, got k = {}, r = {}.'.format(k, r)
        )
    ceiling = -(-(k + 1) // r)
    return min(Fraction(r, k) - Fraction(1, ceiling), Fraction(1, 2 * k))


def corollary13_constants(k, r, radius = 'triangle', variant = 'printed'):
    """
    Composes the constant chain for counting ``r``-factors of ``k``-regular graphs.

    Per graph vertex, ``L`` has dimension ``k/2 - 1`` and carries ``k/2`` slabs.
    The reduced factor vertices ``[H] - a`` have norm at most
    ``sqrt(r|V|/2) + (r/k) sqrt(k|V|/2)`` (``triangle``) or exactly
    ``sqrt(r|V|/2 - r^2|V|/(2k))`` (``orthogonal``), and the polytope is dilated
    by ``1 / epsilon(k, r)``.

    Returns:
        A :py:class:`~.dto.Corollary13Constants`, with ``beta_eff`` a rational
        upper bound on the exact ratio.
    """
    _check_variant(radius, RADIUS_VARIANTS)
    epsilon = epsilon_kr(k, r)
    n_per_vertex = Fraction(k - 2, 2)
    alpha_eff = Fraction(k, k - 2)
    if radius == 'triangle':
        numerator = numeric.sqrt_upper(Fraction(r, 2)) + Fraction(r, k) * numeric.sqrt_upper(Fraction(k, 2))
    else:
        numerator = numeric.sqrt_upper(Fraction(r, 2) - Fraction(r * r, 2 * k))
    beta_eff = max(numerator / (epsilon * numeric.sqrt_lower(n_per_vertex)), Fraction(1))
    params = gamma_of(alpha_eff, beta_eff, variant)
    gamma_graph = params.gamma * float(n_per_vertex) / math.log(2)
    logger.info('[k=%d, r=%d] gamma_graph = %s (beta_eff ~ %s)', k, r, gamma_graph, float(beta_eff))
    return dto.Corollary13Constants(
        k, r, epsilon, n_per_vertex, alpha_eff, beta_eff, radius, params, gamma_graph
    )


def corollary12_gamma(alpha, variant = 'printed'):
    """
    Returns the base-2 exponent for a rounded centrally symmetric polytope with
    ``alpha n`` slab pairs, i.e. ``gamma(alpha, 1) / ln 2``.
    """
    return gamma_of(alpha, 1, variant).gamma / math.log(2)
