"""
This module defines the exceptions that can be thrown by the toolkit.
"""


class Error(Exception):
    """
    Base class for all other errors in this module.
    """


class BadInputError(Error, ValueError):
    """
    Raised when the input to an operation is invalid.
    """

class TooLargeError(BadInputError):
    """
    Raised when an input exceeds a desk-scale guard (vertex count, edge count,
    working constraint count).
    """

class DimensionTooLargeError(TooLargeError):
    """
    Raised when the dimension of a polytope exceeds the enumeration cap.
    """

class NotFullDimensionalError(BadInputError):
    """
    Raised when a polytope has empty interior (relative to its explicit equalities).
    """

class NotCentrallySymmetricError(BadInputError):
    """
    Raised when a system is required to be centrally symmetric with explicit
    pairing, but is not.
    """

class PreconditionViolatedError(BadInputError):
    """
    Raised when an argument lies outside the band an operation is defined on.
    """


class ComputationError(Error, RuntimeError):
    """
    Raised when a computation fails on valid input.
    """

class LinearProgramError(ComputationError):
    """
    Base class for linear programming failures.
    """

class InfeasibleError(LinearProgramError):
    """
    Raised when the feasible region of a linear program is empty.
    """

class UnboundedError(LinearProgramError):
    """
    Raised when the objective of a linear program is unbounded above.
    """

class EmptyPolyhedronError(InfeasibleError):
    """
    Raised when a polyhedron that should be enumerated is empty.
    """

class UnboundedPolyhedronError(UnboundedError):
    """
    Raised when a polyhedron that should be enumerated is unbounded.
    """

class ConvergenceError(ComputationError):
    """
    Raised when an iterative method fails to reach its tolerance.
    """
    def __init__(self, message, tolerance):
        super().__init__(message)
        self._tolerance = tolerance

    @property
    def tolerance(self):
        return self._tolerance

class NoFeasiblePointError(ComputationError):
    """
    Raised when the constant optimizer finds no admissible parameters.
    """

class InconsistencyError(ComputationError):
    """
    Raised when two independent evaluations of the same predicate disagree.
    """


class HypothesisError(Error, RuntimeError):
    """
    Raised when a hypothesis required by a bound does not hold.
    """

class DegreeConditionError(HypothesisError):
    """
    Raised when ``k >= 2r + 1`` fails.
    """

class RegularityError(HypothesisError):
    """
    Raised when a graph is not ``k``-regular.
    """

class ParityError(HypothesisError):
    """
    Raised when ``r |V|`` is odd, so no ``r``-factor can exist.
    """

class ConnectivityError(HypothesisError):
    """
    Raised when a graph is disconnected in a pipeline that requires connectivity.
    """

class CutConditionError(HypothesisError):
    """
    Raised when a cut with at least two vertices on each side is too small.
    """

class Rho221ViolatedError(HypothesisError):
    """
    Raised when the feasibility inequality relating alpha, epsilon and rho fails.
    """

class Infeasible221Error(Rho221ViolatedError):
    """
    Raised when the gamma formula is evaluated at inadmissible parameters.
    """

class CircumradiusViolatedError(HypothesisError):
    """
    Raised when a vertex lies outside the ball of radius ``beta * sqrt(n)``.
    """


class ValidationError(BadInputError):
    """
    Raised when a validation fails.
    """
    def __init__(self, message, errors):
        super().__init__(message)
        self._errors = errors

    @property
    def errors(self):
        return self._errors
