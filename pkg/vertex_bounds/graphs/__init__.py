"""
Regular graphs, their r-factors and the r-factor polytope.
"""
