from fractions import Fraction

import numpy as np
import pytest

from vertex_bounds import dto, errors
from vertex_bounds.geometry import linalg
from vertex_bounds.geometry.containment import circumradius_ok, contains_unit_ball
from vertex_bounds.geometry.rounding import khachiyan_weights, round_polytope
from vertex_bounds.geometry.vertices import enumerate_vertices


def _check_rounded(system, transform, rounded):
    n = system.dimension
    assert contains_unit_ball(rounded)
    assert 1 <= transform.radius_ratio <= Fraction(101, 100)
    # The rounded vertices are the images of the original ones
    mapped = dto.VertexSet.create(n, (transform.apply(v) for v in enumerate_vertices(system)))
    assert circumradius_ok(mapped, transform.radius_ratio)
    assert linalg.matmul(transform.matrix, transform.inverse) == linalg.identity(n)


def _random_symmetric_system(n, pairs, seed):
    generator = np.random.Generator(np.random.Philox(seed))
    slabs = []
    while len(slabs) < pairs:
        normal = tuple(int(x) for x in generator.integers(-5, 6, size = n))
        if any(normal):
            slabs.append((normal, int(generator.integers(1, 4))))
    return dto.HalfspaceSystem.from_slabs(slabs)


def test_cube_is_already_round(cube):
    transform, rounded = round_polytope(cube)
    _check_rounded(cube, transform, rounded)
    assert transform.matrix == linalg.identity(3)
    assert transform.translation == (0, 0, 0)


def test_box_is_scaled_per_axis():
    system = dto.HalfspaceSystem.box([3, 1])
    transform, rounded = round_polytope(system)
    _check_rounded(system, transform, rounded)
    assert transform.matrix == ((Fraction(1, 3), 0), (0, 1))


def test_stretched_box():
    system = dto.HalfspaceSystem.box([4, 1, Fraction(1, 3)])
    transform, rounded = round_polytope(system)
    _check_rounded(system, transform, rounded)


def test_skewed_parallelogram():
    system = dto.HalfspaceSystem.from_slabs([((1, 3), 2), ((0, 1), 1), ((2, -1), 5)])
    transform, rounded = round_polytope(system)
    _check_rounded(system, transform, rounded)


def test_skewed_hexagon_vertices():
    system = dto.HalfspaceSystem.from_slabs([((1, 3), 2), ((0, 1), 1), ((2, -1), 5)])
    transform, rounded = round_polytope(system)
    vertices = enumerate_vertices(rounded)
    assert circumradius_ok(vertices, transform.radius_ratio)


@pytest.mark.slow
@pytest.mark.parametrize('seed', range(5))
def test_random_four_dimensional_systems(seed):
    system = _random_symmetric_system(4, 12, seed)
    transform, rounded = round_polytope(system)
    _check_rounded(system, transform, rounded)


def test_unpaired_constraints_are_rejected(triangle):
    with pytest.raises(errors.NotCentrallySymmetricError):
        round_polytope(triangle)


def test_flat_slab_body_is_rejected():
    system = dto.HalfspaceSystem.from_slabs([((1, 0), 1), ((2, 0), 1)])
    with pytest.raises(errors.NotFullDimensionalError):
        round_polytope(system)


def test_khachiyan_weights():
    points = np.array([[1.0, 0.0], [0.0, 2.0], [1.0, 1.0]])
    weights, kappa = khachiyan_weights(points, 1e-8, 10000)
    assert weights.sum() == pytest.approx(1.0)
    assert (weights >= 0).all()
    # The maximum of p^T M^-1 p is never below n and ends close to it
    assert 2 <= kappa + 1e-12
    assert kappa <= 2 * (1 + 1e-3)


def test_khachiyan_weights_drop_interior_points():
    # The last point lies well inside the ellipsoid through the first two
    points = np.array([[1.0, 0.0], [0.0, 1.0], [0.1, 0.1]])
    weights, kappa = khachiyan_weights(points, 1e-10, 10000)
    assert weights[2] == pytest.approx(0.0, abs = 1e-6)
    assert kappa == pytest.approx(2.0, rel = 1e-3)


def test_khachiyan_iteration_cap():
    points = np.array([[1.0, 0.0], [0.0, 100.0], [1.0, 1.0]])
    with pytest.raises(errors.ConvergenceError):
        khachiyan_weights(points, 1e-12, 1)
