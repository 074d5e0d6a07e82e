"""
Gaussian sampling, probability bounds and randomized vertex certification.
"""
