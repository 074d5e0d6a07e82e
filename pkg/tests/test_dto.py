from fractions import Fraction

import pytest

from vertex_bounds import dto, errors


def test_cube_is_centrally_symmetric(cube):
    assert cube.is_centrally_symmetric()
    assert len(cube.constraints) == 6
    assert cube.pairs == ((0, 1), (2, 3), (4, 5))


def test_triangle_is_not_centrally_symmetric(triangle):
    assert not triangle.is_centrally_symmetric()


@pytest.mark.parametrize('rows,pairs,equalities', [
    ([((0, 0), 1)], (), ()),
    ([((1, 0), 1)], (), ()),
    ([((1, 0), 1), ((1, 0), 1)], [(0, 1)], ()),
    ([((1, 0), 1), ((-1, 0), 2)], [(0, 1)], ()),
    ([((1, 0), 1), ((-1, 0), 1)], (), [(0, 1)]),
    ([((1, 0), 1), ((-1, 0), 1)], [(0, 5)], ()),
])
def test_invalid_systems(rows, pairs, equalities):
    dimension = 3 if rows == [((1, 0), 1)] else 2
    with pytest.raises(errors.BadInputError):
        dto.HalfspaceSystem.create(dimension, rows, pairs = pairs, equalities = equalities)


def test_with_constraints(square):
    bigger = square.with_constraints([((1, 1), 1)])
    assert bigger.constraints[-1] == dto.Constraint((Fraction(1), Fraction(1)), Fraction(1))
    assert bigger.pairs == square.pairs


def test_constraint_slack():
    constraint = dto.Constraint((Fraction(1), Fraction(2)), Fraction(3))
    assert constraint.evaluate((1, 1)) == 3
    assert constraint.slack((0, 0)) == 3
    assert constraint.slack((2, 2)) == -3


def test_vertex_set_dedupes_and_sorts():
    vertices = dto.VertexSet.create(2, [(1, 0), (0, 1), (Fraction(2, 2), 0)])
    assert vertices.points == ((0, 1), (1, 0))
    assert len(vertices) == 2
    assert (1, 0) in vertices
    assert vertices.squared_norms() == (1, 1)


def test_slab_system():
    slabs = dto.SlabSystem.create([(Fraction(3, 5), Fraction(4, 5)), (0, 1)], 2)
    assert slabs.dimension == 2
    assert slabs.as_system().is_centrally_symmetric()
    with pytest.raises(errors.BadInputError):
        dto.SlabSystem.create([(1, 1)], 2)
    with pytest.raises(errors.BadInputError):
        dto.SlabSystem.create([(1, 0)], 0)


def test_blossom_constraint_row():
    blossom = dto.BlossomConstraint((0, ), (1, ), (0, 1, 2), None)
    row = blossom.constraint(4)
    assert row.normal == (-1, 1, -1, 0)
    assert row.offset == 0


def test_graph_cut_and_indicator(k4):
    assert len(k4.cut((0, ))) == 3
    assert len(k4.cut((0, 1))) == 4
    assert k4.indicator((0, 5)) == (1, 0, 0, 0, 0, 1)
    assert k4.incident_edges()[0] == (0, 1, 2)


def test_rounding_transform_apply():
    transform = dto.RoundingTransform(
        ((Fraction(2), Fraction(0)), (Fraction(0), Fraction(1))),
        ((Fraction(1, 2), Fraction(0)), (Fraction(0), Fraction(1))),
        (Fraction(0), Fraction(1)),
        None,
        Fraction(1)
    )
    assert transform.apply((1, 1)) == (2, 2)
