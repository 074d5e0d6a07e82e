"""
This module defines the interface for a linear programming solver.
"""


class Solver:
    """
    Class for a solver of ``max <c, x>`` subject to the constraints of a
    :py:class:`~..dto.HalfspaceSystem`.

    A solver is bound to a single system so that implementations can reuse
    anything they precompute across many objectives.

    Args:
        system: The :py:class:`~..dto.HalfspaceSystem` to optimise over.
    """
    def __init__(self, system):
        self.system = system

    def maximize(self, objective, start = None):
        """
        Maximises the given objective over the system.

        Args:
            objective: The objective vector.
            start: Optional indices of ``n`` constraints to try as the starting
                   basis. Implementations fall back to a cold start when the
                   basis is singular or infeasible.

        Returns:
            An :py:class:`~..dto.LpResult` whose point is a basic optimal solution.

        Raises:
            InfeasibleError: If the system is empty.
            UnboundedError: If the objective is unbounded above.
        """
        raise NotImplementedError

    def feasible_point(self):
        """
        Returns a feasible point of the system.

        Raises:
            InfeasibleError: If the system is empty.
        """
        raise NotImplementedError
