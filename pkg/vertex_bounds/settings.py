"""
Settings helpers for the ``vertex_bounds`` toolkit.
"""

import logging

import voluptuous as v
import yaml

from . import errors
from .validation import use_schema


logger = logging.getLogger(__name__)


def _positive_int():
    return v.All(int, v.Range(min = 1))


def _positive_float():
    return v.All(v.Coerce(float), v.Range(min = 0, min_included = False))


#: Declared settings with their defaults and constraints
SETTINGS_SCHEMA = v.Schema({
    #: Largest (relative) dimension accepted by vertex enumeration
    v.Optional('MAX_DIMENSION', default = 12): _positive_int(),
    #: Largest working constraint set used by vertex enumeration
    v.Optional('MAX_WORKING_CONSTRAINTS', default = 64): _positive_int(),
    #: Largest raw constraint count accepted by vertex enumeration
    v.Optional('MAX_INPUT_CONSTRAINTS', default = 200000): _positive_int(),
    #: Khachiyan stopping tolerance and the radius slack of the rounding step
    v.Optional('ROUNDING_TOLERANCE', default = 1e-6): _positive_float(),
    v.Optional('ROUNDING_MAX_ITERATIONS', default = 10000): _positive_int(),
    #: Decimal digits used by mpmath (40 digits is about 133 bits)
    v.Optional('PRECISION_DIGITS', default = 40): v.All(int, v.Range(min = 20)),
    v.Optional('ORTHONORMAL_TOLERANCE', default = 1e-9): _positive_float(),
    #: Statistical acceptance slack in binomial standard errors
    v.Optional('SIGMA_SLACK', default = 3.0): _positive_float(),
    #: Gaussian objectives are rounded to multiples of 2^-OBJECTIVE_BITS
    v.Optional('OBJECTIVE_BITS', default = 24): v.All(int, v.Range(min = 8, max = 52)),
    v.Optional('EXHAUSTIVE_CUT_MAX_VERTICES', default = 24): _positive_int(),
    v.Optional('FACTOR_MAX_EDGES', default = 40): _positive_int(),
    v.Optional('POLYTOPE_MAX_VERTICES', default = 12): _positive_int(),
    v.Optional('PIPELINE_POLYTOPE_MAX_VERTICES', default = 8): _positive_int(),
    #: Grid and refinement schedule of the gamma optimizer
    v.Optional('EPSILON_STEP', default = 0.01): v.All(v.Coerce(float), v.Range(min = 1e-4, max = 0.5)),
    v.Optional('RHO_GRID_POINTS', default = 512): v.All(int, v.Range(min = 16)),
    v.Optional('RHO_MIN_EXPONENT', default = -4): int,
    v.Optional('RHO_MAX_EXPONENT', default = 8): int,
    v.Optional('REFINE_TOLERANCE', default = 1e-9): _positive_float(),
    v.Optional('REFINE_ROUNDS', default = 8): _positive_int(),
    #: Number of Gaussian samples drawn per block by the Monte Carlo checks
    v.Optional('MONTE_CARLO_CHUNK', default = 10000): _positive_int(),
})


class ToolkitSettings:
    """
    Settings object for the toolkit.

    Values are validated against :py:data:`SETTINGS_SCHEMA`; unknown keys are
    rejected. The library reads settings at call time, so :py:meth:`configure`
    takes effect immediately.

    Args:
        overrides: Setting values that replace the defaults.
    """
    def __init__(self, **overrides):
        self._values = use_schema(SETTINGS_SCHEMA)(overrides)

    def __getattr__(self, name):
        try:
            return self.__dict__['_values'][name]
        except KeyError:
            raise AttributeError(name)

    def as_dict(self):
        """
        Returns the resolved settings as a plain ``dict``.
        """
        return dict(self._values)

    def configure(self, **overrides):
        """
        Replaces the current values with the defaults updated by ``overrides``.
        """
        values = use_schema(SETTINGS_SCHEMA)(overrides)
        logger.info('Settings configured with overrides for %s', sorted(overrides))
        self._values = values

    def configure_from_yaml(self, path):
        """
        Configures the settings from a YAML mapping stored at ``path``.
        """
        with open(path) as fh:
            overrides = yaml.safe_load(fh) or {}
        if not isinstance(overrides, dict):
            raise errors.ValidationError(
                'Settings file must contain a mapping',
                { '<root>': 'expected a mapping of setting names to values' }
            )
        self.configure(**{ str(k): val for k, val in overrides.items() })


toolkit_settings = ToolkitSettings()
