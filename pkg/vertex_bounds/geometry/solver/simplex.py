"""
Exact primal simplex over inequality systems ``A x <= b``.

A basis is a set of ``n`` linearly independent constraint rows. The basic
solution is ``A_B^{-1} b_B`` and the multipliers are ``c^T A_B^{-1}``; a basis
is optimal when every multiplier is nonnegative. Pivots follow Bland's rule,
so the method terminates on degenerate systems without perturbation.
"""

import logging
from fractions import Fraction

from ... import dto, errors
from .. import linalg
from .base import Solver


logger = logging.getLogger(__name__)


def _ratio_test(rows, offsets, point, direction, exclude = ()):
    """
    Returns ``(step, index)`` of the first row blocking a move along
    ``direction``, or ``(None, None)`` if no row blocks. Ties are broken by
    the smallest row index.
    """
    best_step, best_index = None, None
    for i, (row, offset) in enumerate(zip(rows, offsets)):
        if i in exclude:
            continue
        rate = linalg.dot(row, direction)
        if rate <= 0:
            continue
        step = (offset - linalg.dot(row, point)) / rate
        if best_step is None or step < best_step:
            best_step, best_index = step, i
    return best_step, best_index


class _Program:
    """
    A raw inequality program ``rows * x <= offsets`` of full column rank.
    """
    def __init__(self, rows, offsets):
        self.rows = rows
        self.offsets = offsets
        self.dimension = len(rows[0])

    def slack(self, i, point):
        return self.offsets[i] - linalg.dot(self.rows[i], point)

    def purify(self, point, objective):
        """
        Moves a feasible point to a basic feasible solution without decreasing
        the objective and returns ``(point, basis)``.
        """
        n = self.dimension
        basis = []
        basis_rows = []
        while True:
            # Adopt every active row that is independent of the current basis
            for i in range(len(self.rows)):
                if len(basis) == n:
                    break
                if i in basis or self.slack(i, point) != 0:
                    continue
                if linalg.rank(basis_rows + [self.rows[i]]) > len(basis):
                    basis.append(i)
                    basis_rows.append(self.rows[i])
            if len(basis) == n:
                return point, basis
            direction = linalg.nullspace(basis_rows, n)[0]
            gain = linalg.dot(objective, direction)
            if gain < 0:
                direction = tuple(-x for x in direction)
                gain = -gain
            step, blocking = _ratio_test(self.rows, self.offsets, point, direction, basis)
            if blocking is None:
                if gain > 0:
                    raise errors.UnboundedError('Objective is unbounded above.')
                direction = tuple(-x for x in direction)
                step, blocking = _ratio_test(self.rows, self.offsets, point, direction, basis)
                if blocking is None:
                    raise errors.ComputationError('Feasible region contains a line.')
            point = tuple(x + step * d for x, d in zip(point, direction))

    def basic_solution(self, basis):
        """
        Returns ``(point, inverse)`` for the given basis, or ``None`` when the
        basis is singular or its basic solution is infeasible.
        """
        try:
            inverse = linalg.inverse([self.rows[i] for i in basis])
        except errors.ComputationError:
            return None
        point = linalg.matvec(inverse, [self.offsets[i] for i in basis])
        if any(self.slack(i, point) < 0 for i in range(len(self.rows))):
            return None
        return point, inverse

    def simplex(self, objective, point, basis, inverse = None):
        """
        Runs Bland's rule from a basic feasible solution and returns
        ``(point, basis, pivots)`` at an optimum.
        """
        n = self.dimension
        basis = list(basis)
        if inverse is None:
            inverse = linalg.inverse([self.rows[i] for i in basis])
        # Columns of the inverse, one per basis position
        columns = [list(col) for col in linalg.transpose(inverse)]
        pivots = 0
        while True:
            multipliers = [linalg.dot(objective, col) for col in columns]
            negative = [k for k in range(n) if multipliers[k] < 0]
            if not negative:
                return point, basis, pivots
            leaving = min(negative, key = lambda k: basis[k])
            direction = tuple(-x for x in columns[leaving])
            step, entering = _ratio_test(self.rows, self.offsets, point, direction, basis)
            if entering is None:
                raise errors.UnboundedError('Objective is unbounded above.')
            point = tuple(x + step * d for x, d in zip(point, direction))
            w = [linalg.dot(self.rows[entering], col) for col in columns]
            pivot = columns[leaving]
            new_pivot = [x / w[leaving] for x in pivot]
            columns = [
                new_pivot if l == leaving else [a - (w[l] / w[leaving]) * b for a, b in zip(col, pivot)]
                for l, col in enumerate(columns)
            ]
            logger.debug('Pivot: row %d leaves, row %d enters, step %s', basis[leaving], entering, step)
            basis[leaving] = entering
            pivots += 1


class ExactSimplexSolver(Solver):
    """
    Exact rational simplex solver for a :py:class:`~...dto.HalfspaceSystem`.

    When the constraint normals do not span ``R^n`` the solver appends the
    equations ``<z, x> = 0`` for a basis ``z`` of their orthogonal complement.
    Optima found in that case are never reported as vertices.
    """
    def __init__(self, system):
        super().__init__(system)
        n = system.dimension
        rows = [c.normal for c in system.constraints]
        offsets = [c.offset for c in system.constraints]
        self.lineality = linalg.nullspace(rows, n)
        for z in self.lineality:
            rows.extend([tuple(z), tuple(-x for x in z)])
            offsets.extend([Fraction(0), Fraction(0)])
        self.program = _Program(rows, offsets)
        self._feasible_point = None

    def feasible_point(self):
        if self._feasible_point is None:
            self._feasible_point = self._phase_one()
        return self._feasible_point

    def _phase_one(self):
        n = self.system.dimension
        program = self.program
        if all(b >= 0 for b in program.offsets):
            return tuple(Fraction(0) for _ in range(n))
        # Minimise t subject to A x - t <= b and t >= 0
        rows = [tuple(row) + (Fraction(-1), ) for row in program.rows]
        rows.append(tuple(Fraction(0) for _ in range(n)) + (Fraction(-1), ))
        offsets = list(program.offsets) + [Fraction(0)]
        auxiliary = _Program(rows, offsets)
        objective = tuple(Fraction(0) for _ in range(n)) + (Fraction(-1), )
        start = tuple(Fraction(0) for _ in range(n)) + (max(-b for b in program.offsets), )
        point, basis = auxiliary.purify(start, objective)
        point, _, pivots = auxiliary.simplex(objective, point, basis)
        logger.debug('[n=%d] Phase one finished after %d pivots', n, pivots)
        if point[n] > 0:
            raise errors.InfeasibleError('Constraint system is infeasible.')
        return point[:n]

    def maximize(self, objective, start = None):
        n = self.system.dimension
        objective = tuple(Fraction(x) for x in objective)
        if len(objective) != n:
            raise errors.BadInputError('Objective has the wrong dimension.')
        program = self.program
        if any(linalg.dot(objective, z) != 0 for z in self.lineality):
            self.feasible_point()
            raise errors.UnboundedError('Objective is unbounded above.')
        warm = None
        if start is not None:
            warm = program.basic_solution(list(start))
            if warm is None:
                logger.debug('[n=%d] Warm start basis rejected', n)
        if warm is not None:
            point, inverse = warm
            basis = list(start)
        else:
            point = self.feasible_point()
            point, basis = program.purify(point, objective)
            inverse = None
        point, basis, pivots = program.simplex(objective, point, basis, inverse)
        logger.debug('[n=%d] Simplex finished after %d pivots', n, pivots)
        active = [
            c.normal
            for c in self.system.constraints
            if c.offset == linalg.dot(c.normal, point)
        ]
        is_vertex = not self.lineality and linalg.rank(active) == n
        return dto.LpResult(
            linalg.dot(objective, point),
            point,
            is_vertex,
            tuple(sorted(basis))
        )


def lp_maximize(system, objective, start = None):
    """
    Maximises ``<objective, x>`` over a :py:class:`~...dto.HalfspaceSystem`.

    Args:
        system: The system.
        objective: The objective vector.
        start: Optional starting basis (indices of ``n`` constraints).

    Returns:
        An :py:class:`~...dto.LpResult`.
    """
    return ExactSimplexSolver(system).maximize(objective, start)
