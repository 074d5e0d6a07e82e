from fractions import Fraction

import numpy as np
import pytest

from vertex_bounds import dto, errors
from vertex_bounds.geometry.solver import ExactSimplexSolver, lp_maximize
from vertex_bounds.geometry.vertices import enumerate_vertices


def test_square_maximum(square):
    result = lp_maximize(square, (1, 1))
    assert result.value == 2
    assert result.point == (Fraction(1), Fraction(1))
    assert result.is_vertex
    assert len(result.basis) == 2


def test_cube_maximum_is_exact_vertex(cube):
    result = lp_maximize(cube, (2, -1, 3))
    assert result.value == 6
    assert result.point == (Fraction(1), Fraction(-1), Fraction(1))
    assert result.is_vertex


def test_warm_start_gives_the_same_optimum(cube):
    solver = ExactSimplexSolver(cube)
    first = solver.maximize((1, 1, 1))
    second = solver.maximize((1, -1, 1), start = first.basis)
    assert second.value == 3
    assert second.point == (Fraction(1), Fraction(-1), Fraction(1))


def test_invalid_warm_start_is_ignored(cube):
    result = lp_maximize(cube, (1, 2, 3), start = (0, 1, 2))
    assert result.value == 6


def test_infeasible_origin_uses_phase_one():
    # 1 <= x <= 2, 3 <= y <= 5
    system = dto.HalfspaceSystem.create(2, [
        ((-1, 0), -1), ((1, 0), 2), ((0, -1), -3), ((0, 1), 5),
    ])
    result = lp_maximize(system, (-1, -1))
    assert result.point == (Fraction(1), Fraction(3))
    assert result.value == -4


def test_degenerate_vertex():
    # Four constraints meet at the apex (0, 0, 1) of a pyramid
    system = dto.HalfspaceSystem.create(3, [
        ((1, 0, 1), 1), ((-1, 0, 1), 1), ((0, 1, 1), 1), ((0, -1, 1), 1), ((0, 0, -1), 0),
    ])
    result = lp_maximize(system, (0, 0, 1))
    assert result.value == 1
    assert result.point == (0, 0, 1)
    assert result.is_vertex


def test_infeasible_system_raises():
    system = dto.HalfspaceSystem.create(1, [((1, ), 0), ((-1, ), -1)])
    with pytest.raises(errors.InfeasibleError):
        lp_maximize(system, (1, ))


def test_unbounded_objective_raises():
    system = dto.HalfspaceSystem.create(2, [((-1, 0), 0), ((0, -1), 0)])
    with pytest.raises(errors.UnboundedError):
        lp_maximize(system, (1, 1))


def test_lineality_optimum_is_not_a_vertex():
    # The slab |x| <= 1 in the plane contains the line x = 0
    system = dto.HalfspaceSystem.create(2, [((1, 0), 1), ((-1, 0), 1)])
    result = lp_maximize(system, (1, 0))
    assert result.value == 1
    assert not result.is_vertex
    with pytest.raises(errors.UnboundedError):
        lp_maximize(system, (1, 1))


def test_wrong_objective_length(square):
    with pytest.raises(errors.BadInputError):
        lp_maximize(square, (1, 1, 1))


def _random_polytope(n, extra, seed):
    # The cube plus random cuts that keep the origin strictly inside
    generator = np.random.Generator(np.random.Philox(seed))
    rows = list(dto.HalfspaceSystem.cube(n, 2).constraints)
    while len(rows) < 2 * n + extra:
        normal = tuple(int(x) for x in generator.integers(-4, 5, size = n))
        if any(normal):
            rows.append((normal, int(generator.integers(1, 6))))
    return dto.HalfspaceSystem.create(n, rows), generator


@pytest.mark.parametrize('n,seed', [(2, 0), (2, 1), (3, 2), (3, 3), (4, 4)])
def test_maximum_matches_the_best_vertex(n, seed):
    system, generator = _random_polytope(n, 2 * n, seed)
    vertices = enumerate_vertices(system)
    for _ in range(5):
        objective = tuple(int(x) for x in generator.integers(-9, 10, size = n))
        result = lp_maximize(system, objective)
        best = max(sum(a * x for a, x in zip(objective, v)) for v in vertices)
        assert result.value == best
        assert result.point in vertices or not result.is_vertex
