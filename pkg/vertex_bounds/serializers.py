"""
Serializers converting objects from :py:mod:`~.dto` to and from plain data.

Rationals are always written as ``"p/q"`` strings so that reports are exact
and byte-stable.
"""

import enum
import json
import os
from fractions import Fraction

import mpmath
import numpy as np
import yaml

from . import dto, errors
from .graphs.generators import named_graph
from .validation import GRAPH_SCHEMA, PERTURBATION_SCHEMA, POLYTOPE_SCHEMA, use_schema


#: Version of the JSON report layout
SCHEMA_VERSION = 1


def to_primitive(value):
    """
    Converts a value into JSON-compatible data.
    """
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating, mpmath.mpf)):
        return float(value)
    serializer = SERIALIZERS.get(type(value))
    if serializer is not None:
        return serializer().to_representation(value)
    if isinstance(value, dict):
        return { str(k): to_primitive(v) for k, v in value.items() }
    if isinstance(value, (tuple, list, set, frozenset)):
        return [to_primitive(v) for v in value]
    raise TypeError('Cannot serialize {!r}'.format(value))


class Serializer:
    """
    Base class for DTO serializers.
    """
    fields = ()

    def to_representation(self, obj):
        return { name: to_primitive(getattr(obj, name)) for name in self.fields }


def make_dto_serializer(dto_class, exclude = []):
    """
    Returns a new serializer class for the given DTO class, which should be
    a ``namedtuple``.

    Args:
        dto_class: The DTO class to build a serializer for.
        exclude: A list of field names to exclude.

    Returns:
        A subclass of :py:class:`Serializer`.
    """
    return type(
        dto_class.__name__ + 'Serializer',
        (Serializer, ),
        { 'fields': tuple(name for name in dto_class._fields if name not in exclude) }
    )


class VertexSetSerializer(make_dto_serializer(dto.VertexSet)):
    def to_representation(self, obj):
        result = super().to_representation(obj)
        result['count'] = len(obj)
        return result


class HalfspaceSystemSerializer(make_dto_serializer(dto.HalfspaceSystem)):
    def to_representation(self, obj):
        return {
            'n': obj.dimension,
            'constraints': [
                { 'normal': to_primitive(c.normal), 'offset': to_primitive(c.offset) }
                for c in obj.constraints
            ],
            'pairs': to_primitive(obj.pairs),
            'equalities': to_primitive(obj.equalities),
        }


class WitnessReportSerializer(make_dto_serializer(dto.WitnessReport, exclude = ['vertices'])):
    def to_representation(self, obj):
        result = super().to_representation(obj)
        result['vertices'] = to_primitive(obj.vertices.points)
        return result


class GraphSerializer(make_dto_serializer(dto.Graph)):
    def to_representation(self, obj):
        return {
            'name': obj.name,
            'vertices': obj.vertex_count,
            'edges': to_primitive(obj.edges),
        }


class FactorInstanceSerializer(make_dto_serializer(dto.FactorInstance, exclude = ['a'])):
    pass


class SubspaceLSerializer(make_dto_serializer(dto.SubspaceL, exclude = ['basis', 'projections'])):
    def to_representation(self, obj):
        result = super().to_representation(obj)
        result['max_projection_norm'] = max(
            (float(sum(x * x for x in u)) ** 0.5 for u in obj.projections),
            default = 0.0
        )
        return result


class ReducedFactorPolytopeSerializer(make_dto_serializer(dto.ReducedFactorPolytope,
                                                          exclude = ['system', 'slabs'])):
    def to_representation(self, obj):
        result = super().to_representation(obj)
        result['constraints'] = len(obj.system.constraints) if obj.system else None
        result['slabs'] = len(obj.slabs.vectors)
        return result


class RunConfigSerializer(make_dto_serializer(dto.RunConfig)):
    pass


#: Serializer used for each DTO class
SERIALIZERS = {
    dto.Constraint: make_dto_serializer(dto.Constraint),
    dto.HalfspaceSystem: HalfspaceSystemSerializer,
    dto.VertexSet: VertexSetSerializer,
    dto.Ellipsoid: make_dto_serializer(dto.Ellipsoid),
    dto.LpResult: make_dto_serializer(dto.LpResult),
    dto.RoundingTransform: make_dto_serializer(dto.RoundingTransform),
    dto.SlabSystem: make_dto_serializer(dto.SlabSystem),
    dto.WitnessReport: WitnessReportSerializer,
    dto.EmpiricalCheck: make_dto_serializer(dto.EmpiricalCheck),
    dto.GammaParams: make_dto_serializer(dto.GammaParams),
    dto.Corollary13Constants: make_dto_serializer(dto.Corollary13Constants),
    dto.Graph: GraphSerializer,
    dto.FactorInstance: FactorInstanceSerializer,
    dto.CutWitness: make_dto_serializer(dto.CutWitness),
    dto.BlossomConstraint: make_dto_serializer(dto.BlossomConstraint),
    dto.SubspaceL: SubspaceLSerializer,
    dto.ReducedFactorPolytope: ReducedFactorPolytopeSerializer,
    dto.RunConfig: RunConfigSerializer,
}


def dumps(data):
    """
    Returns the canonical JSON text of a report.
    """
    return json.dumps(to_primitive(data), sort_keys = True, indent = 2) + '\n'


def _read_structured(path):
    with open(path) as fh:
        if path.endswith(('.yaml', '.yml')):
            return yaml.safe_load(fh)
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise errors.ValidationError(
                'File is not valid JSON',
                { '<root>': '{} (line {})'.format(exc.msg, exc.lineno) }
            )


def system_from_data(data):
    """
    Returns a :py:class:`~.dto.HalfspaceSystem` from validated polytope data.
    """
    data = use_schema(POLYTOPE_SCHEMA)(data)
    return dto.HalfspaceSystem.create(
        data['n'],
        [(c['normal'], c['offset']) for c in data['constraints']],
        pairs = data['pairs'],
        equalities = data['equalities']
    )


def load_system(path):
    """
    Loads a polytope file in JSON (or YAML) form.
    """
    return system_from_data(_read_structured(path))


def _read_edge_list(path):
    edges = []
    vertices = 0
    with open(path) as fh:
        for number, line in enumerate(fh, start = 1):
            line = line.split('#', 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            try:
                u, v = (int(p) for p in parts)
            except ValueError:
                raise errors.ValidationError(
                    'Invalid edge list',
                    { 'line {}'.format(number): "expected 'u v', got '{}'".format(line) }
                )
            edges.append([u, v])
            vertices = max(vertices, u + 1, v + 1)
    return { 'name': os.path.basename(path), 'vertices': vertices, 'edges': edges }


def load_graph(source):
    """
    Loads a graph from a file path or builds it from a name.

    Files ending in ``.json``, ``.yaml`` or ``.yml`` hold a mapping with
    ``vertices``, ``edges`` and an optional ``name``; any other file is read
    as an edge list with one ``u v`` pair per line.
    """
    if not os.path.isfile(source):
        return named_graph(source)
    if source.endswith(('.json', '.yaml', '.yml')):
        data = _read_structured(source)
    else:
        data = _read_edge_list(source)
    data = use_schema(GRAPH_SCHEMA)(data)
    return dto.Graph.create(data['vertices'], data['edges'], data['name'] or os.path.basename(source))


def load_perturbation(path):
    """
    Loads a perturbation file ``{"y": [...]}`` as a tuple of ``Fraction`` values.
    """
    return tuple(use_schema(PERTURBATION_SCHEMA)(_read_structured(path))['y'])
