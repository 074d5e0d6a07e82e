"""
Linear programming over halfspace systems.
"""

from .base import Solver
from .simplex import ExactSimplexSolver, lp_maximize
