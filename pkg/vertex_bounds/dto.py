"""
This module defines data-transfer objects used across the toolkit.

All objects are immutable ``namedtuple`` instances, so they are safe to share
between threads once constructed. Exact quantities are stored as ``Fraction``
values.
"""

import enum
import itertools
from collections import namedtuple
from fractions import Fraction

from . import errors


def _as_vector(values):
    return tuple(Fraction(x) for x in values)


class Constraint(namedtuple('Constraint', ['normal', 'offset'])):
    """
    Represents the inequality ``<normal, x> <= offset``.

    Attributes:
        normal: A tuple of ``Fraction`` values.
        offset: A ``Fraction``.
    """
    def evaluate(self, point):
        """
        Returns ``<normal, point>``.
        """
        return sum(a * x for a, x in zip(self.normal, point))

    def slack(self, point):
        """
        Returns ``offset - <normal, point>``; negative when violated.
        """
        return self.offset - self.evaluate(point)


class HalfspaceSystem(namedtuple('HalfspaceSystem', ['dimension', 'constraints',
                                                     'pairs', 'equalities'])):
    """
    Represents a polyhedron by an H-description.

    Attributes:
        dimension: The ambient dimension ``n``.
        constraints: A tuple of :py:class:`Constraint` objects.
        pairs: A tuple of ``(i, j)`` index pairs of slab partners, i.e. rows with
               opposite normals and equal offsets. Pairing is explicit and is
               never inferred.
        equalities: A tuple of ``(i, j)`` index pairs of rows with opposite
                    normals and opposite offsets that together encode an equation.
    """
    @classmethod
    def create(cls, dimension, constraints, pairs = (), equalities = ()):
        """
        Returns a new system after checking its invariants.

        Args:
            dimension: The ambient dimension.
            constraints: An iterable of ``(normal, offset)`` pairs.
            pairs: Slab partner index pairs.
            equalities: Equation index pairs.

        Returns:
            A :py:class:`HalfspaceSystem`.
        """
        if dimension < 1:
            raise errors.BadInputError('Dimension must be at least 1.')
        rows = []
        for normal, offset in constraints:
            normal = _as_vector(normal)
            if len(normal) != dimension:
                raise errors.BadInputError(
                    'Normal of length {} in a system of dimension {}.'.format(len(normal), dimension)
                )
            if not any(normal):
                raise errors.BadInputError('Every normal vector must be nonzero.')
            rows.append(Constraint(normal, Fraction(offset)))
        pairs = tuple(tuple(p) for p in pairs)
        equalities = tuple(tuple(p) for p in equalities)
        for i, j in itertools.chain(pairs, equalities):
            if not (0 <= i < len(rows) and 0 <= j < len(rows)) or i == j:
                raise errors.BadInputError('Invalid constraint pair ({}, {}).'.format(i, j))
            if any(a != -b for a, b in zip(rows[i].normal, rows[j].normal)):
                raise errors.BadInputError(
                    'Paired constraints {} and {} must have opposite normals.'.format(i, j)
                )
        for i, j in pairs:
            if rows[i].offset != rows[j].offset:
                raise errors.BadInputError(
                    'Slab pair ({}, {}) must have equal offsets.'.format(i, j)
                )
        for i, j in equalities:
            if rows[i].offset != -rows[j].offset:
                raise errors.BadInputError(
                    'Equation pair ({}, {}) must have opposite offsets.'.format(i, j)
                )
        return cls(dimension, tuple(rows), pairs, equalities)

    @classmethod
    def from_slabs(cls, slabs):
        """
        Returns the system ``|<u, x>| <= bound`` for each ``(u, bound)`` in ``slabs``.
        """
        slabs = [(_as_vector(u), Fraction(bound)) for u, bound in slabs]
        if not slabs:
            raise errors.BadInputError('At least one slab is required.')
        rows = []
        pairs = []
        for u, bound in slabs:
            pairs.append((len(rows), len(rows) + 1))
            rows.append((u, bound))
            rows.append((tuple(-x for x in u), bound))
        return cls.create(len(slabs[0][0]), rows, pairs = pairs)

    @classmethod
    def box(cls, half_widths):
        """
        Returns the centred box ``|x_i| <= half_widths[i]``.
        """
        n = len(half_widths)
        return cls.from_slabs(
            (tuple(Fraction(int(i == j)) for j in range(n)), w)
            for i, w in enumerate(half_widths)
        )

    @classmethod
    def cube(cls, n, half_width = 1):
        """
        Returns the cube ``[-half_width, half_width]^n``.
        """
        return cls.box([half_width] * n)

    def is_centrally_symmetric(self):
        """
        Indicates if every constraint belongs to exactly one explicit slab pair.
        """
        seen = [i for pair in self.pairs for i in pair]
        return len(seen) == len(set(seen)) == len(self.constraints)

    def with_constraints(self, constraints):
        """
        Returns the system extended by the given ``(normal, offset)`` rows.
        """
        extra = type(self).create(self.dimension, constraints).constraints
        return self._replace(constraints = self.constraints + extra)


class VertexSet(namedtuple('VertexSet', ['dimension', 'points'])):
    """
    Represents a finite set of exact points.

    Attributes:
        dimension: The ambient dimension.
        points: A lexicographically sorted tuple of distinct points, each a tuple
                of ``Fraction`` values.
    """
    @classmethod
    def create(cls, dimension, points):
        """
        Returns a new vertex set, removing duplicates and sorting the points.
        """
        unique = set()
        for point in points:
            point = _as_vector(point)
            if len(point) != dimension:
                raise errors.BadInputError('Point has the wrong dimension.')
            unique.add(point)
        return cls(dimension, tuple(sorted(unique)))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, point):
        return _as_vector(point) in set(self.points)

    def squared_norms(self):
        """
        Returns the exact squared Euclidean norms of the points.
        """
        return tuple(sum(x * x for x in p) for p in self.points)


class Ellipsoid(namedtuple('Ellipsoid', ['center', 'shape'])):
    """
    Represents the ellipsoid ``{x : (x - c)^T A (x - c) <= 1}``.

    Attributes:
        center: The centre ``c`` as a tuple.
        shape: The symmetric positive definite matrix ``A`` as a tuple of rows.
    """


class LpResult(namedtuple('LpResult', ['value', 'point', 'is_vertex', 'basis'])):
    """
    Represents the outcome of a linear program.

    Attributes:
        value: The exact optimal value.
        point: An optimal basic feasible solution.
        is_vertex: Indicates if the constraints active at ``point`` have rank ``n``.
        basis: The indices of ``n`` linearly independent active constraints.
    """


class RoundingTransform(namedtuple('RoundingTransform', ['matrix', 'inverse', 'translation',
                                                         'ellipsoid', 'radius_ratio'])):
    """
    Represents the affine map ``x -> matrix x + translation`` produced by rounding.

    Attributes:
        matrix: The linear part as a tuple of rows of ``Fraction`` values.
        inverse: The exact inverse of ``matrix``.
        translation: The translation (always zero for symmetric input).
        ellipsoid: The inscribed :py:class:`Ellipsoid` that is mapped to the unit ball.
        radius_ratio: A rational ``beta`` such that the image lies in the ball of
                      radius ``beta sqrt(n)``.
    """
    def apply(self, point):
        return tuple(
            sum(a * x for a, x in zip(row, point)) + t
            for row, t in zip(self.matrix, self.translation)
        )


class SlabSystem(namedtuple('SlabSystem', ['dimension', 'vectors', 'rho'])):
    """
    Represents the slab body ``{y : |<y, u_i>| <= rho}``.

    Attributes:
        dimension: The ambient dimension.
        vectors: The vectors ``u_i`` as tuples of ``Fraction`` values.
        rho: The common width.
    """
    @classmethod
    def create(cls, vectors, rho, tolerance = 0):
        """
        Returns a new slab system after checking ``||u_i|| <= 1`` exactly, up to
        an optional squared-norm ``tolerance``.
        """
        vectors = tuple(_as_vector(u) for u in vectors)
        if not vectors:
            raise errors.BadInputError('At least one slab vector is required.')
        if len({ len(u) for u in vectors }) != 1:
            raise errors.BadInputError('All slab vectors must have the same length.')
        for u in vectors:
            if sum(x * x for x in u) > 1 + Fraction(tolerance):
                raise errors.BadInputError('Every slab vector must have norm at most 1.')
        if rho <= 0:
            raise errors.BadInputError('Slab width must be positive.')
        return cls(len(vectors[0]), vectors, rho)

    def as_system(self):
        """
        Returns the slab body as a :py:class:`HalfspaceSystem` with explicit pairs.
        """
        return HalfspaceSystem.from_slabs((u, self.rho) for u in self.vectors)


class WitnessReport(namedtuple('WitnessReport', ['seed', 'trials', 'tau',
                                                 'distinct_vertices_found', 'vertices',
                                                 'empirical_success_rate',
                                                 'theoretical_lower_rate',
                                                 'union_bound', 'sigma',
                                                 'skipped_non_vertex', 'sandwich'])):
    """
    Represents the outcome of a randomized vertex certification run.

    Attributes:
        seed: The seed the run was derived from.
        trials: The number of Gaussian objectives drawn.
        tau: The success threshold, or ``None`` if none was supplied.
        distinct_vertices_found: The number of distinct verified vertices.
        vertices: The :py:class:`VertexSet` of verified vertices.
        empirical_success_rate: Fraction of trials whose maximum reached ``tau``,
                                or ``None`` without ``tau``.
        theoretical_lower_rate: The lower bound on the success probability, or ``None``.
        union_bound: The union bound on the success probability, or ``None``.
        sigma: The binomial standard error of the success rate, or ``None``.
        skipped_non_vertex: Trials whose optimum could not be certified as a vertex.
        sandwich: ``True``/``False`` when both bounds are available, else ``None``.
    """


class EmpiricalCheck(namedtuple('EmpiricalCheck', ['kind', 'empirical', 'bound',
                                                   'sigma', 'satisfied',
                                                   'trials', 'seed'])):
    """
    Represents a Monte Carlo comparison of an event probability with a bound.

    Attributes:
        kind: The :py:class:`Kind` of the check.
        empirical: The empirical probability.
        bound: The bound being compared against.
        sigma: The binomial standard error of ``empirical``.
        satisfied: Indicates if the bound holds up to the statistical slack.
        trials: The number of samples.
        seed: The seed of the sample stream.
    """
    @enum.unique
    class Kind(enum.Enum):
        """
        Enum representing the checkable probability bounds.
        """
        NORM = 'norm'
        TAIL = 'tail'
        SIDAK = 'sidak'
        SIDAK_PRODUCT = 'sidak-product'


class GammaParams(namedtuple('GammaParams', ['alpha', 'beta', 'epsilon', 'rho',
                                             'gamma', 'variant'])):
    """
    Represents an admissible parameter bundle for the vertex count exponent.

    Attributes:
        alpha: The slab count ratio ``m / n`` (at least 1).
        beta: The circumradius ratio (at least 1).
        epsilon: The norm concentration parameter in ``(0, 1)``.
        rho: The slab width.
        gamma: The exponent, positive when admissible.
        variant: The name of the exponent formula used.
    """


class Corollary13Constants(namedtuple('Corollary13Constants', ['k', 'r', 'epsilon_kr',
                                                               'n_per_vertex',
                                                               'alpha_eff', 'beta_eff',
                                                               'radius', 'params',
                                                               'gamma_graph'])):
    """
    Represents the constant chain for counting ``r``-factors.

    Attributes:
        k: The degree of the graph.
        r: The degree of the factors.
        epsilon_kr: The exact band width of the deep point.
        n_per_vertex: The exact dimension of ``L`` per graph vertex, ``k/2 - 1``.
        alpha_eff: The exact slab ratio ``|E| / n``.
        beta_eff: A rational upper bound on the circumradius ratio of the dilated polytope.
        radius: The name of the radius bound used.
        params: The :py:class:`GammaParams` found for ``(alpha_eff, beta_eff)``.
        gamma_graph: The base-2 exponent per graph vertex.
    """


class Graph(namedtuple('Graph', ['vertex_count', 'edges', 'name'])):
    """
    Represents a simple undirected graph on vertices ``0 .. vertex_count - 1``.

    Attributes:
        vertex_count: The number of vertices.
        edges: A sorted tuple of ``(u, v)`` pairs with ``u < v``.
        name: A human-readable name, or ``None``.
    """
    @classmethod
    def create(cls, vertex_count, edges, name = None):
        """
        Returns a new graph after checking that it is simple.
        """
        normalised = set()
        for u, v in edges:
            if u == v:
                raise errors.BadInputError('Loops are not allowed (vertex {}).'.format(u))
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise errors.BadInputError('Edge ({}, {}) has an unknown endpoint.'.format(u, v))
            edge = (min(u, v), max(u, v))
            if edge in normalised:
                raise errors.BadInputError('Multiple edges are not allowed {}.'.format(edge))
            normalised.add(edge)
        return cls(vertex_count, tuple(sorted(normalised)), name)

    def degrees(self):
        degrees = [0] * self.vertex_count
        for u, v in self.edges:
            degrees[u] += 1
            degrees[v] += 1
        return tuple(degrees)

    def incident_edges(self):
        """
        Returns, for each vertex, the tuple of indices of its incident edges.
        """
        incident = [[] for _ in range(self.vertex_count)]
        for index, (u, v) in enumerate(self.edges):
            incident[u].append(index)
            incident[v].append(index)
        return tuple(tuple(edges) for edges in incident)

    def cut(self, vertices):
        """
        Returns the indices of the edges with exactly one endpoint in ``vertices``.
        """
        vertices = set(vertices)
        return tuple(
            index
            for index, (u, v) in enumerate(self.edges)
            if (u in vertices) != (v in vertices)
        )

    def indicator(self, edge_indices):
        """
        Returns the indicator vector in ``R^E`` of the given edge indices.
        """
        chosen = set(edge_indices)
        return tuple(Fraction(int(i in chosen)) for i in range(len(self.edges)))


class FactorInstance(namedtuple('FactorInstance', ['graph', 'k', 'r', 'a', 'epsilon'])):
    """
    Represents a ``k``-regular graph together with the factor degree ``r``.

    Use :py:func:`~.graphs.factors.factor_instance` to construct one with all
    invariants checked.

    Attributes:
        graph: The :py:class:`Graph`.
        k: The degree of the graph.
        r: The degree of the factors.
        a: The deep point, ``r/k`` on every edge.
        epsilon: The exact band width ``epsilon(k, r)``.
    """


class CutWitness(namedtuple('CutWitness', ['vertices', 'size'])):
    """
    Represents a cut ``delta(U)``.

    Attributes:
        vertices: The sorted tuple of vertices of ``U``.
        size: The number of edges in the cut.
    """


class BlossomConstraint(namedtuple('BlossomConstraint', ['vertices', 'odd_edges',
                                                         'cut', 'slack'])):
    """
    Represents the parity inequality for a vertex set ``U`` and ``F`` in ``delta(U)``.

    The inequality reads ``sum_{delta(U) - F} x(e) - sum_F x(e) >= 1 - |F|``.

    Attributes:
        vertices: The sorted tuple of vertices of ``U``.
        odd_edges: The sorted tuple of edge indices of ``F``.
        cut: The sorted tuple of edge indices of ``delta(U)``.
        slack: The slack at the point it was evaluated at, or ``None``.
    """
    def constraint(self, edge_count):
        """
        Returns the inequality as a :py:class:`Constraint` in ``<=`` form.
        """
        odd = set(self.odd_edges)
        cut = set(self.cut)
        normal = tuple(
            Fraction(1) if e in odd else (Fraction(-1) if e in cut else Fraction(0))
            for e in range(edge_count)
        )
        return Constraint(normal, Fraction(len(odd) - 1))


class SubspaceL(namedtuple('SubspaceL', ['basis', 'projections', 'dimension',
                                         'lower_bound'])):
    """
    Represents the subspace of ``R^E`` on which every vertex degree sum vanishes.

    Attributes:
        basis: Rows spanning ``L`` exactly; mutually orthogonal exactly and of unit
               norm up to the configured precision.
        projections: For each edge ``e``, the coordinates ``u_e`` of the orthogonal
                     projection of ``[e]`` onto ``L``.
        dimension: ``dim L``.
        lower_bound: ``|E| - |V|``.
    """


class ReducedFactorPolytope(namedtuple('ReducedFactorPolytope', ['instance', 'subspace',
                                                                 'system', 'slabs',
                                                                 'vertices'])):
    """
    Represents the factor polytope shifted by the deep point, in coordinates of ``L``.

    Attributes:
        instance: The :py:class:`FactorInstance`.
        subspace: The :py:class:`SubspaceL`.
        system: The :py:class:`HalfspaceSystem` in ``R^n``, or ``None`` when the
                polytope was not built.
        slabs: The :py:class:`SlabSystem` ``|<u_e, x>| <= epsilon``.
        vertices: The :py:class:`VertexSet` of reduced factor indicators.
    """


class RunConfig(namedtuple('RunConfig', ['subcommand', 'inputs', 'seed', 'trials',
                                         'precision', 'output', 'format', 'options'])):
    """
    Represents the fully resolved configuration of a CLI run.

    Attributes:
        subcommand: The subcommand name.
        inputs: A ``dict`` of input paths or graph names.
        seed: The seed, or ``None`` for deterministic subcommands.
        trials: The number of trials, or ``None``.
        precision: The mpmath precision in decimal digits.
        output: The output path, or ``None`` for stdout.
        format: The output :py:class:`Format`.
        options: A ``dict`` of the remaining subcommand options.
    """
    @enum.unique
    class Format(enum.Enum):
        """
        Enum representing the report formats.
        """
        JSON = 'json'
        CSV = 'csv'
        HUMAN = 'human'
