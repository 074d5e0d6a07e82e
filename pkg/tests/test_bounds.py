import math

import pytest

from vertex_bounds import dto, errors
from vertex_bounds.witness import bounds
from vertex_bounds.witness.sampling import random_unit_vectors, trial_generator


TRIALS = 10 ** 5


def test_closed_form_bounds():
    assert bounds.norm_concentration_bound(100, 0.5) == pytest.approx(math.exp(-100 / 16))
    assert bounds.tail_bound(0, 1) == pytest.approx(0.5)
    assert bounds.tail_bound(2, 1) == pytest.approx(0.5 * math.exp(-2))
    assert bounds.sidak_bound(30, 2) == pytest.approx((1 - math.exp(-2)) ** 30)
    assert bounds.standard_error(0.5, 100) == pytest.approx(0.05)


@pytest.mark.slow
def test_norm_concentration():
    check = bounds.lemma21_empirical('norm', { 'n': 100, 'epsilon': 0.5 }, TRIALS, seed = 1)
    assert check.kind is dto.EmpiricalCheck.Kind.NORM
    assert check.satisfied
    assert check.trials == TRIALS


@pytest.mark.slow
@pytest.mark.parametrize('tau', [0, 1, 2])
def test_gaussian_tail(tau):
    check = bounds.lemma21_empirical('tail', { 'a': [1, 0, 0], 'tau': tau }, TRIALS, seed = 2)
    assert check.satisfied
    assert check.empirical <= check.bound + 3 * check.sigma


@pytest.mark.slow
@pytest.mark.parametrize('system', range(5))
def test_sidak_lower_bound(system):
    u = random_unit_vectors(20, 30, trial_generator(100 + system, 0))
    check = bounds.lemma21_empirical('sidak', { 'u': u, 'rho': 2 }, TRIALS, seed = system)
    assert check.satisfied
    assert check.empirical >= check.bound - 3 * check.sigma


@pytest.mark.slow
def test_sidak_product():
    u = random_unit_vectors(5, 8, trial_generator(9, 0))
    check = bounds.lemma21_empirical('sidak-product', { 'u': u, 'rho': 1 }, TRIALS, seed = 3)
    assert check.kind is dto.EmpiricalCheck.Kind.SIDAK_PRODUCT
    assert check.satisfied


def test_checks_are_deterministic():
    params = { 'n': 10, 'epsilon': 0.3 }
    assert bounds.lemma21_empirical('norm', params, 2000, 4) == bounds.lemma21_empirical('norm', params, 2000, 4)


def test_unknown_kind():
    with pytest.raises(errors.ValidationError):
        bounds.lemma21_empirical('bogus', {}, TRIALS, 1)


def test_invalid_params():
    with pytest.raises(errors.ValidationError) as excinfo:
        bounds.lemma21_empirical('norm', { 'n': 0, 'epsilon': 2 }, TRIALS, 1)
    assert set(excinfo.value.errors) == { 'n', 'epsilon' }


def test_slab_vectors_must_be_short():
    with pytest.raises(errors.ValidationError):
        bounds.lemma21_empirical('sidak', { 'u': [[1, 1]], 'rho': 1 }, TRIALS, 1)


def test_too_few_trials():
    with pytest.raises(errors.BadInputError):
        bounds.lemma21_empirical('norm', { 'n': 10, 'epsilon': 0.5 }, 10, 1)
