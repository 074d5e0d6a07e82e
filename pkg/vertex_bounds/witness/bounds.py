"""
Gaussian probability bounds and their Monte Carlo checks.
"""

import logging
import math

import mpmath
import numpy as np

from .. import dto, errors, numeric
from ..settings import toolkit_settings
from ..validation import build_params_validator
from .sampling import gaussian_blocks


logger = logging.getLogger(__name__)


#: Smallest number of samples accepted by the Monte Carlo checks
MIN_TRIALS = 1000


def norm_concentration_bound(n, epsilon):
    """
    Returns ``exp(-epsilon^2 n / 4)``, a bound on ``Pr(||y||^2 <= (1 - epsilon) n)``.
    """
    with numeric.precision():
        return float(mpmath.exp(-numeric.to_mpf(epsilon) ** 2 * n / 4))


def tail_bound(tau, a_norm):
    """
    Returns ``exp(-tau^2 / (2 ||a||^2)) / 2``, a bound on ``Pr(<y, a> >= tau)``
    for ``tau >= 0``.
    """
    with numeric.precision():
        tau, a_norm = numeric.to_mpf(tau), numeric.to_mpf(a_norm)
        return float(mpmath.exp(-tau * tau / (2 * a_norm * a_norm)) / 2)


def sidak_bound(m, rho):
    """
    Returns ``(1 - exp(-rho^2 / 2))^m``, a lower bound on the Gaussian measure
    of ``m`` symmetric slabs of width ``rho`` with normals of norm at most 1.
    """
    with numeric.precision():
        rho = numeric.to_mpf(rho)
        return float((-mpmath.expm1(-rho * rho / 2)) ** m)


def standard_error(p, trials):
    return math.sqrt(max(p * (1 - p), 0.0) / trials)


def _check_trials(trials):
    if trials < MIN_TRIALS:
        raise errors.BadInputError('At least {} trials are required.'.format(MIN_TRIALS))


def _frequency(event, n, trials, seed):
    """
    Returns the empirical frequency of ``event`` over Gaussian samples, where
    ``event`` maps a block of samples to a boolean array.
    """
    hits = 0
    for block in gaussian_blocks(n, trials, seed):
        hits += int(np.count_nonzero(event(block)))
    return hits / trials


def _slab_matrix(u):
    return np.array([[float(x) for x in row] for row in u]).T


def lemma21_empirical(kind, params, trials, seed):
    """
    Compares a Monte Carlo estimate with the corresponding Gaussian bound.

    For ``norm`` and ``tail`` the bound is an upper bound and holds when
    ``empirical <= bound + s sigma``; for ``sidak`` it is a lower bound and holds
    when ``empirical >= bound - s sigma``, where ``s`` is ``SIGMA_SLACK``.

    Args:
        kind: ``norm`` (params ``n``, ``epsilon``), ``tail`` (``a``, ``tau``) or
              ``sidak`` (``u``, ``rho``).
        params: The parameters as a ``dict``.
        trials: The number of samples, at least :py:data:`MIN_TRIALS`.
        seed: The seed of the sample stream.

    Returns:
        An :py:class:`~..dto.EmpiricalCheck`.
    """
    try:
        kind = dto.EmpiricalCheck.Kind(kind)
    except ValueError:
        raise errors.ValidationError(
            'Unknown check kind',
            { 'kind': "'{}' is not a known check kind.".format(kind) }
        )
    params = build_params_validator(kind.value)(params)
    if kind is dto.EmpiricalCheck.Kind.SIDAK_PRODUCT:
        return sidak_product_check(params['u'], params['rho'], trials, seed)
    _check_trials(trials)
    if kind is dto.EmpiricalCheck.Kind.NORM:
        n, epsilon = params['n'], params['epsilon']
        empirical = _frequency(
            lambda y: np.einsum('ij,ij->i', y, y) <= (1 - epsilon) * n,
            n, trials, seed
        )
        bound = norm_concentration_bound(n, epsilon)
    elif kind is dto.EmpiricalCheck.Kind.TAIL:
        a = np.array([float(x) for x in params['a']])
        tau = params['tau']
        empirical = _frequency(lambda y: y @ a >= tau, len(a), trials, seed)
        bound = tail_bound(tau, math.sqrt(float(sum(x * x for x in params['a']))))
    else:
        u = _slab_matrix(params['u'])
        rho = params['rho']
        empirical = _frequency(
            lambda y: np.all(np.abs(y @ u) <= rho, axis = 1),
            u.shape[0], trials, seed
        )
        bound = sidak_bound(u.shape[1], rho)
    sigma = standard_error(empirical, trials)
    slack = toolkit_settings.SIGMA_SLACK * sigma
    if kind is dto.EmpiricalCheck.Kind.SIDAK:
        satisfied = empirical >= bound - slack
    else:
        satisfied = empirical <= bound + slack
    logger.info(
        '[%s] empirical %s against bound %s over %d trials (seed %s)',
        kind.value, empirical, bound, trials, seed
    )
    return dto.EmpiricalCheck(kind, empirical, bound, sigma, satisfied, trials, seed)


def sidak_product_check(u, rho, trials, seed):
    """
    Checks that the joint probability of the slabs ``|<y, u_i>| <= rho`` is at
    least the product of the individual slab probabilities, both estimated from
    the same samples.

    Returns:
        An :py:class:`~..dto.EmpiricalCheck` whose ``bound`` is the product.
    """
    _check_trials(trials)
    u = _slab_matrix(u)
    joint = 0
    marginal = np.zeros(u.shape[1], dtype = np.int64)
    for block in gaussian_blocks(u.shape[0], trials, seed):
        inside = np.abs(block @ u) <= rho
        joint += int(np.count_nonzero(np.all(inside, axis = 1)))
        marginal += np.count_nonzero(inside, axis = 0)
    empirical = joint / trials
    product = float(np.prod(marginal / trials))
    sigma = standard_error(empirical, trials)
    satisfied = empirical >= product - toolkit_settings.SIGMA_SLACK * sigma
    logger.info(
        '[sidak-product] joint %s against product %s over %d trials (seed %s)',
        empirical, product, trials, seed
    )
    return dto.EmpiricalCheck(
        dto.EmpiricalCheck.Kind.SIDAK_PRODUCT, empirical, product, sigma, satisfied, trials, seed
    )
