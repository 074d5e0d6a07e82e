"""
Exact and randomized tools for lower bounds on the number of vertices of
polytopes, with an application to counting r-factors of regular graphs.
"""
