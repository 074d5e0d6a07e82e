"""
Conversions between exact rationals, mpmath numbers and floats.
"""

from fractions import Fraction

import mpmath

from .settings import toolkit_settings


def precision():
    """
    Returns an mpmath context manager using the configured precision.
    """
    return mpmath.workdps(toolkit_settings.PRECISION_DIGITS)


def to_mpf(value):
    """
    Converts a ``Fraction``, ``int`` or ``float`` to an ``mpf`` at the current precision.
    """
    if isinstance(value, Fraction):
        return mpmath.mpf(value.numerator) / value.denominator
    return mpmath.mpf(value)


def to_fraction(value):
    """
    Returns the exact rational value of an ``mpf``.
    """
    mantissa, exponent = mpmath.mpf(value).man_exp
    if exponent >= 0:
        return Fraction(int(mantissa) * 2 ** exponent)
    return Fraction(int(mantissa), 2 ** -exponent)


def sqrt_upper(value):
    """
    Returns a rational ``s`` with ``s * s >= value``, as close as the configured
    precision allows.
    """
    value = Fraction(value)
    with precision():
        root = to_fraction(mpmath.sqrt(to_mpf(value)))
        step = Fraction(1, 2 ** (mpmath.mp.prec - 8))
    while root * root < value:
        root += max(root, Fraction(1)) * step
    return root


def sqrt_lower(value):
    """
    Returns a rational ``s >= 0`` with ``s * s <= value``.
    """
    value = Fraction(value)
    with precision():
        root = to_fraction(mpmath.sqrt(to_mpf(value)))
        step = Fraction(1, 2 ** (mpmath.mp.prec - 8))
    while root * root > value:
        root = max(root - max(root, Fraction(1)) * step, Fraction(0))
    return root
