"""
Module providing validation utilities for toolkit inputs.
"""

from fractions import Fraction

import voluptuous as v

from . import errors


def use_schema(schema):
    """
    Returns a function that validates incoming data using the given schema.

    If a ``voluptuous.MultipleInvalid`` error is raised, it is converted into
    a :py:class:`~.errors.ValidationError`.
    """
    def validate(params):
        try:
            return schema(params)
        except v.MultipleInvalid as exc:
            raise errors.ValidationError(
                'At least one field is invalid',
                # Build a dict of the errors
                {
                    '.'.join(str(p) for p in e.path) or '<root>': e.msg
                    for e in exc.errors
                }
            )
    return validate


def rational(value):
    """
    Coerces ``value`` to a ``Fraction``.

    Accepts integers, fractions, floats (converted exactly) and strings of the
    form ``"p/q"``, ``"p"`` or a decimal literal. Booleans are rejected.
    """
    if isinstance(value, bool):
        raise v.Invalid('Expected a rational number, not a boolean.')
    if isinstance(value, (int, Fraction, float)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise v.Invalid("'{}' is not a rational number.".format(value))
    raise v.Invalid('Expected a rational number.')


def sequence(value):
    """
    Accepts any list-like value (lists, tuples, numpy arrays) and returns it as
    a list, so that data from JSON, YAML and library callers validate alike.
    """
    if isinstance(value, (str, bytes, dict)):
        raise v.Invalid('expected a list')
    try:
        return list(value)
    except TypeError:
        raise v.Invalid('expected a list')


def rational_vector(min_length = 1):
    return v.All(sequence, [rational], v.Length(min = min_length), v.Coerce(tuple))


#: An (i, j) pair of indices, as used for slab pairs, equalities and edges
INDEX_PAIR = v.All(sequence, [int], v.Length(min = 2, max = 2), v.Coerce(tuple))


#: Schema for a polytope file
POLYTOPE_SCHEMA = v.Schema({
    v.Required('n'): v.All(int, v.Range(min = 1)),
    v.Required('constraints'): v.All(
        [
            v.Schema({
                v.Required('normal'): rational_vector(),
                v.Required('offset'): rational,
            })
        ],
        v.Length(min = 1)
    ),
    v.Optional('pairs', default = []): v.All(sequence, [INDEX_PAIR]),
    v.Optional('equalities', default = []): v.All(sequence, [INDEX_PAIR]),
})


#: Schema for a graph file in JSON or YAML form
GRAPH_SCHEMA = v.Schema({
    v.Optional('name', default = None): v.Any(None, str),
    v.Required('vertices'): v.All(int, v.Range(min = 1)),
    v.Required('edges'): v.All(sequence, [INDEX_PAIR]),
})


#: Schema for the perturbation file used by the deep point check
PERTURBATION_SCHEMA = v.Schema({
    v.Required('y'): rational_vector(),
})


def params_constraint(kind):
    """
    Returns the parameter schema for the given Monte Carlo check kind.
    """
    try:
        factory = getattr(params_constraint, kind.replace('-', '_'))
    except AttributeError:
        raise errors.ValidationError(
            'Unknown check kind',
            { 'kind': "'{}' is not a known check kind.".format(kind) }
        )
    return factory()


def register_params(kind):
    """
    Returns a decorator that registers the decorated function as providing
    the parameter schema for the given check kind.
    """
    def decorator(func):
        setattr(params_constraint, kind.replace('-', '_'), func)
        return func
    return decorator


def open_unit_interval(value):
    value = v.Coerce(float)(value)
    if not 0 < value < 1:
        raise v.Invalid('Must lie strictly between 0 and 1.')
    return value


def nonzero_vector(value):
    if all(x == 0 for x in value):
        raise v.Invalid('Vector must be nonzero.')
    return value


def unit_norm_bounded(rows):
    for row in rows:
        if sum(x * x for x in row) > 1:
            raise v.Invalid('Every slab vector must have norm at most 1.')
    return rows


def same_length(rows):
    if len({ len(row) for row in rows }) > 1:
        raise v.Invalid('All vectors must have the same length.')
    return rows


@register_params('norm')
def norm_params():
    return v.Schema({
        v.Required('n'): v.All(int, v.Range(min = 1)),
        v.Required('epsilon'): open_unit_interval,
    })


@register_params('tail')
def tail_params():
    return v.Schema({
        v.Required('a'): v.All(rational_vector(), nonzero_vector),
        v.Required('tau'): v.All(v.Coerce(float), v.Range(min = 0)),
    })


@register_params('sidak')
@register_params('sidak-product')
def sidak_params():
    return v.Schema({
        v.Required('u'): v.All(
            sequence,
            [rational_vector()],
            v.Length(min = 1),
            same_length,
            unit_norm_bounded,
            v.Coerce(tuple)
        ),
        v.Required('rho'): v.All(v.Coerce(float), v.Range(min = 0)),
    })


def build_params_validator(kind):
    """
    Builds a validator function for the parameters of a Monte Carlo check.

    Args:
        kind: One of ``norm``, ``tail`` or ``sidak``.

    Returns:
        A function that returns the validated parameters or raises
        :py:class:`~.errors.ValidationError`.
    """
    return use_schema(params_constraint(kind))
