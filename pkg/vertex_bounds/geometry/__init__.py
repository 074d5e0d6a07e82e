"""
Exact polytope kernel: linear programming, vertex enumeration, containment
checks and rounding.
"""
