import itertools
from fractions import Fraction

import numpy as np
import pytest

from vertex_bounds import dto, errors
from vertex_bounds.geometry.vertices import enumerate_vertices, is_full_dimensional, verify_vertex
from vertex_bounds.settings import toolkit_settings


@pytest.mark.parametrize('n', [1, 2, 3, 4])
def test_cube_vertices(n):
    vertices = enumerate_vertices(dto.HalfspaceSystem.cube(n))
    expected = set(itertools.product((Fraction(-1), Fraction(1)), repeat = n))
    assert set(vertices.points) == expected
    assert len(vertices) == 2 ** n


def test_triangle_vertices(triangle):
    vertices = enumerate_vertices(triangle)
    assert vertices.points == ((0, 0), (0, 1), (1, 0))


def test_redundant_and_duplicate_constraints_are_ignored(square):
    system = square.with_constraints([((1, 1), 5), ((2, 0), 2), ((1, 1), 3)])
    assert len(enumerate_vertices(system)) == 4


def test_cross_polytope_vertices():
    # |x| + |y| + |z| <= 1 has 8 facets and 6 vertices
    rows = [(signs, 1) for signs in itertools.product((-1, 1), repeat = 3)]
    vertices = enumerate_vertices(dto.HalfspaceSystem.create(3, rows))
    assert len(vertices) == 6
    assert (1, 0, 0) in vertices


def test_equalities_are_eliminated():
    # x + y + z = 1, x, y, z >= 0: a triangle in R^3
    system = dto.HalfspaceSystem.create(
        3,
        [((-1, 0, 0), 0), ((0, -1, 0), 0), ((0, 0, -1), 0), ((1, 1, 1), 1), ((-1, -1, -1), -1)],
        equalities = [(3, 4)]
    )
    vertices = enumerate_vertices(system)
    assert vertices.points == ((0, 0, 1), (0, 1, 0), (1, 0, 0))


def test_not_full_dimensional_without_explicit_equalities():
    system = dto.HalfspaceSystem.create(2, [
        ((1, 0), 0), ((-1, 0), 0), ((0, 1), 1), ((0, -1), 1),
    ])
    with pytest.raises(errors.NotFullDimensionalError):
        enumerate_vertices(system)


def test_unbounded_polyhedron():
    system = dto.HalfspaceSystem.create(2, [((-1, 0), 0), ((0, -1), 0)])
    with pytest.raises(errors.UnboundedPolyhedronError):
        enumerate_vertices(system)


def test_empty_polyhedron():
    system = dto.HalfspaceSystem.create(1, [((1, ), 0), ((-1, ), -1)])
    with pytest.raises(errors.EmptyPolyhedronError):
        enumerate_vertices(system)


def test_dimension_cap():
    toolkit_settings.configure(MAX_DIMENSION = 2)
    with pytest.raises(errors.DimensionTooLargeError):
        enumerate_vertices(dto.HalfspaceSystem.cube(3))


def test_is_full_dimensional(square):
    assert is_full_dimensional(square)
    flat = dto.HalfspaceSystem.create(2, [((1, 0), 0), ((-1, 0), 0), ((0, 1), 1), ((0, -1), 1)])
    assert not is_full_dimensional(flat)


def test_verify_vertex(square):
    assert verify_vertex(square, (1, -1))
    assert not verify_vertex(square, (1, 0))
    assert not verify_vertex(square, (2, 2))


@pytest.mark.parametrize('seed', range(3))
def test_enumeration_ignores_order_and_positive_scaling(seed):
    generator = np.random.Generator(np.random.Philox(seed))
    rows = [(c.normal, c.offset) for c in dto.HalfspaceSystem.cube(3).constraints]
    rows += [((1, 1, 1), 2), ((-1, 2, 0), 2), ((0, -1, 1), Fraction(3, 2))]
    expected = enumerate_vertices(dto.HalfspaceSystem.create(3, rows))
    order = generator.permutation(len(rows))
    scales = generator.integers(1, 7, size = len(rows))
    shuffled = [
        (tuple(int(scales[i]) * x for x in rows[i][0]), int(scales[i]) * Fraction(rows[i][1]))
        for i in order
    ]
    assert enumerate_vertices(dto.HalfspaceSystem.create(3, shuffled)) == expected
