"""
Reproducible Gaussian streams.

Every trial draws from its own counter-based ``Philox`` stream keyed by
``(seed, trial)``, so a trial's sample does not depend on how many trials ran
before it or in which order.
"""

from fractions import Fraction

import numpy as np

from ..settings import toolkit_settings


def trial_generator(seed, trial):
    """
    Returns the ``numpy.random.Generator`` for the given trial of a seeded run.
    """
    sequence = np.random.SeedSequence(seed, spawn_key = (trial, ))
    return np.random.Generator(np.random.Philox(sequence))


def sample_gaussian(n, generator):
    """
    Returns ``n`` independent standard normal variates as a float array.
    """
    return generator.standard_normal(n)


def gaussian_blocks(n, trials, seed):
    """
    Yields ``(trials, n)`` standard normal samples in blocks of at most
    ``MONTE_CARLO_CHUNK`` rows. Block ``i`` is drawn from trial stream ``i``.
    """
    chunk = toolkit_settings.MONTE_CARLO_CHUNK
    for block, start in enumerate(range(0, trials, chunk)):
        size = min(chunk, trials - start)
        yield trial_generator(seed, block).standard_normal((size, n))


def quantize(vector, bits = None):
    """
    Rounds a float vector to the nearest multiples of ``2^-bits`` as exact
    ``Fraction`` values.
    """
    if bits is None:
        bits = toolkit_settings.OBJECTIVE_BITS
    scale = 2 ** bits
    return tuple(Fraction(int(round(float(x) * scale)), scale) for x in vector)


def random_unit_vectors(n, m, generator, bits = None):
    """
    Returns ``m`` random rational vectors in ``R^n`` of norm at most 1, each
    close to uniform on the sphere.
    """
    if bits is None:
        bits = toolkit_settings.OBJECTIVE_BITS
    vectors = []
    for row in generator.standard_normal((m, n)):
        # Shrink slightly so that rounding cannot push the norm above 1
        row = row / (np.linalg.norm(row) * (1 + 2.0 ** (4 - bits)))
        vectors.append(quantize(row, bits))
    return vectors
