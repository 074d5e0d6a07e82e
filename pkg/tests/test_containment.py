import itertools
from fractions import Fraction

import pytest

from vertex_bounds import dto, errors
from vertex_bounds.geometry.containment import circumradius_ok, contains_slab_body, contains_unit_ball
from vertex_bounds.geometry.vertices import enumerate_vertices


def test_cube_contains_smaller_slab_body(cube):
    slabs = [((1, 0, 0), Fraction(1, 2)), ((0, 1, 0), 1), ((0, 0, 1), 1)]
    assert contains_slab_body(cube, slabs)


def test_wider_slab_body_is_not_contained(cube):
    slabs = [((1, 0, 0), 2), ((0, 1, 0), 1), ((0, 0, 1), 1)]
    assert not contains_slab_body(cube, slabs)


def test_unbounded_slab_body_is_not_contained(cube):
    slabs = [((1, 0, 0), 1), ((0, 1, 0), 1)]
    assert not contains_slab_body(cube, slabs)


def test_slab_dimension_mismatch(square):
    with pytest.raises(errors.BadInputError):
        contains_slab_body(square, [((1, 0, 0), 1)])


def test_circumradius_of_cube(cube):
    vertices = dto.VertexSet.create(3, [(1, 1, 1), (-1, 1, 1)])
    assert circumradius_ok(vertices, 1)
    assert not circumradius_ok(vertices, Fraction(99, 100))
    assert circumradius_ok(vertices, Fraction(1, 2), dimension = 12)


def test_circumradius_needs_points():
    with pytest.raises(errors.BadInputError):
        circumradius_ok(dto.VertexSet.create(2, []), 1)


def test_contains_unit_ball(square):
    assert contains_unit_ball(square)
    assert not contains_unit_ball(dto.HalfspaceSystem.cube(2, Fraction(1, 2)))
    diamond = dto.HalfspaceSystem.create(2, [((1, 1), 1), ((-1, -1), 1), ((1, -1), 1), ((-1, 1), 1)])
    assert not contains_unit_ball(diamond)


@pytest.mark.parametrize('scale,contained', [(2, False), (3, True), (4, True)])
def test_octahedron_against_vertex_check(scale, contained):
    # |x| + |y| + |z| <= scale against the unit slabs |x_i| <= 1
    rows = [(signs, scale) for signs in itertools.product((-1, 1), repeat = 3)]
    outer = dto.HalfspaceSystem.create(3, rows)
    slabs = [((1, 0, 0), 1), ((0, 1, 0), 1), ((0, 0, 1), 1)]
    inner = enumerate_vertices(dto.HalfspaceSystem.from_slabs(slabs))
    by_vertices = all(
        sum(a * x for a, x in zip(c.normal, v)) <= c.offset
        for v in inner for c in outer.constraints
    )
    assert contains_slab_body(outer, slabs) == by_vertices == contained


def test_containment_is_monotone_in_the_width(cube):
    u = [(1, 0, 0), (0, 1, 0), (1, 1, 1)]
    verdicts = [
        contains_slab_body(cube, [(vector, width) for vector in u])
        for width in (Fraction(1, 4), Fraction(1, 2), 1, Fraction(3, 2), 2)
    ]
    assert verdicts == sorted(verdicts, reverse = True)
    assert verdicts[0] and not verdicts[-1]
