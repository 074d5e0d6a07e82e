"""
Command line entry point for the ``vertex-bounds`` toolkit.
"""

import argparse
import csv
import functools
import io
import json
import logging
import math
import sys
from fractions import Fraction

import yaml

from . import constants, dto, errors, serializers
from .geometry.containment import circumradius_ok, contains_slab_body, contains_unit_ball
from .geometry.rounding import round_polytope
from .geometry.vertices import enumerate_vertices
from .graphs.factors import (
    check_cut_condition, check_regular, enumerate_r_factors, factor_instance
)
from .graphs.generators import is_connected
from .graphs.polytope import build_factor_polytope, deep_point_check
from .graphs.subspace import random_admissible_perturbation, reduce_to_L
from .settings import toolkit_settings
from .validation import rational
from .witness.bounds import lemma21_empirical
from .witness.certify import certify_vertex_count, default_trials
from .witness.sampling import random_unit_vectors, trial_generator


logger = logging.getLogger(__name__)


#: Exit code for each error family
EXIT_CODES = [
    (errors.BadInputError, 2, 'invalid_input'),
    (errors.HypothesisError, 4, 'hypothesis_failed'),
    (errors.ComputationError, 3, 'computation_failed'),
]


class ReportWriter:
    """
    Writes reports to stdout or a file in the configured format.
    """
    def __init__(self, output = None, format = dto.RunConfig.Format.JSON):
        self.output = output
        self.format = format

    def render(self, report):
        data = serializers.to_primitive(report)
        if self.format is dto.RunConfig.Format.JSON:
            return serializers.dumps(data)
        if self.format is dto.RunConfig.Format.HUMAN:
            return yaml.safe_dump(data, sort_keys = True, default_flow_style = False)
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator = '\n')
        writer.writerow(['key', 'value'])
        for key, value in sorted(_flatten(data)):
            writer.writerow([key, value])
        return buffer.getvalue()

    def write(self, report):
        text = self.render(report)
        if self.output:
            with open(self.output, 'w') as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)


def _flatten(data, prefix = ''):
    if isinstance(data, dict):
        for key, value in data.items():
            yield from _flatten(value, '{}{}.'.format(prefix, key))
    elif isinstance(data, list):
        yield prefix.rstrip('.'), json.dumps(data, sort_keys = True)
    else:
        yield prefix.rstrip('.'), data


def convert_errors(command):
    """
    Decorator that converts errors from :py:mod:`.errors` into exit codes and
    JSON error bodies on stdout.
    """
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except errors.Error as exc:
            for error_class, code, name in EXIT_CODES:
                if isinstance(exc, error_class):
                    break
            else:
                code, name = 3, 'computation_failed'
            body = { 'error': name, 'detail': str(exc) }
            if isinstance(exc, errors.ValidationError):
                body['errors'] = exc.errors
            sys.stdout.write(serializers.dumps(body))
            logger.error('%s: %s', name, exc)
            return code
        except Exception as exc:
            logger.exception('Unexpected error occurred')
            sys.stdout.write(serializers.dumps({ 'error': 'computation_failed', 'detail': str(exc) }))
            return 3
    return wrapper


def _require_seed(config):
    if config.seed is None:
        raise errors.BadInputError('--seed is required for randomized subcommands.')


def _report(config, result):
    return {
        'schema_version': serializers.SCHEMA_VERSION,
        'config': config,
        'result': result,
    }


def _graph(config):
    return serializers.load_graph(config.inputs['graph'])


def cmd_gamma(config):
    options = config.options
    params = constants.gamma_of(options['alpha'], options['beta'], options['variant'])
    return _report(config, {
        'params': params,
        'check_221': constants.check_221(params.alpha, params.epsilon, params.rho),
        'implementation_derived': True,
    })


def cmd_gamma_graph(config):
    options = config.options
    chain = constants.corollary13_constants(
        options['k'], options['r'], options['radius'], options['variant']
    )
    return _report(config, { 'constants': chain, 'implementation_derived': True })


def cmd_certify(config):
    _require_seed(config)
    options = config.options
    system = serializers.load_system(config.inputs['polytope'])
    trials = config.trials or default_trials(system.dimension)
    params = None
    if options.get('alpha') is not None and options.get('beta') is not None:
        params = constants.gamma_of(options['alpha'], options['beta'])
    report = certify_vertex_count(system, trials, config.seed, tau = options.get('tau'), params = params)
    return _report(config, { 'witness': report, 'params': params })


def cmd_lemma21(config):
    _require_seed(config)
    options = config.options
    kind = options['kind']
    if kind == 'norm':
        params = { 'n': options['n'], 'epsilon': options['epsilon'] }
    elif kind == 'tail':
        params = { 'a': options['a'], 'tau': options['tau'] }
    else:
        if config.inputs.get('slabs'):
            with open(config.inputs['slabs']) as fh:
                u = yaml.safe_load(fh)['u']
        else:
            u = random_unit_vectors(
                options['n'], options['m'], trial_generator(config.seed, 2 ** 32)
            )
        params = { 'u': u, 'rho': options['rho'] }
    check = lemma21_empirical(kind, params, config.trials or 10 ** 5, config.seed)
    return _report(config, { 'check': check })


def cmd_round(config):
    system = serializers.load_system(config.inputs['polytope'])
    transform, rounded = round_polytope(system)
    n = system.dimension
    alpha = Fraction(len(system.pairs), n)
    verdicts = { 'contains_unit_ball': contains_unit_ball(rounded) }
    if n <= 6 and len(rounded.constraints) <= toolkit_settings.MAX_WORKING_CONSTRAINTS:
        verdicts['circumradius'] = circumradius_ok(enumerate_vertices(rounded), transform.radius_ratio)
    return _report(config, {
        'transform': transform,
        'rounded': rounded,
        'alpha': alpha,
        'verdicts': verdicts,
        'gamma': constants.corollary12_gamma(alpha),
        'implementation_derived': True,
    })


def cmd_factors_count(config):
    graph = _graph(config)
    factors = enumerate_r_factors(graph, config.options['r'])
    return _report(config, { 'graph': graph, 'count': len(factors), 'factors': factors })


def cmd_factors_polytope(config):
    graph = _graph(config)
    system = build_factor_polytope(graph, config.options['r'])
    return _report(config, { 'graph': graph, 'polytope': system })


def cmd_graph_check(config):
    graph = _graph(config)
    k, r = config.options['k'], config.options['r']
    regular = check_regular(graph, k)
    verdicts = {
        'regular': regular,
        'degree_condition': r >= 1 and k >= 2 * r + 1,
        'parity': r * graph.vertex_count % 2 == 0,
        'connected': is_connected(graph),
    }
    worst = None
    if regular:
        verdicts['cut_condition'], worst = check_cut_condition(graph, k, r)
    return _report(config, {
        'graph': graph,
        'verdicts': verdicts,
        'worst_cut': worst,
        'ok': all(verdicts.values()) and regular,
    })


def cmd_deep_point(config):
    graph = _graph(config)
    options = config.options
    instance = factor_instance(graph, options['k'], options['r'])
    perturbations = []
    if config.inputs.get('y'):
        perturbations.append(serializers.load_perturbation(config.inputs['y']))
    elif options.get('random'):
        _require_seed(config)
        perturbations.extend(
            random_admissible_perturbation(instance, trial_generator(config.seed, i))
            for i in range(options['random'])
        )
    else:
        perturbations.append(tuple(Fraction(0) for _ in graph.edges))
    results = [deep_point_check(instance, y) for y in perturbations]
    return _report(config, {
        'instance': instance,
        'checked': len(results),
        'inside': sum(results),
        'ok': all(results),
    })


def _hypothesis(name, check):
    """
    Runs ``check`` and prefixes any hypothesis failure with ``name``.
    """
    try:
        return check()
    except errors.HypothesisError as exc:
        raise type(exc)('{} failed: {}'.format(name, exc))


def cmd_pipeline_graph(config):
    _require_seed(config)
    graph = _graph(config)
    k, r = config.options['k'], config.options['r']

    def regular():
        if not check_regular(graph, k):
            raise errors.RegularityError('Graph is not {}-regular.'.format(k))

    _hypothesis('check_regular', regular)
    _hypothesis('epsilon_kr', lambda: constants.epsilon_kr(k, r))
    instance = _hypothesis('parity', lambda: factor_instance(graph, k, r))

    def connected():
        if not is_connected(graph):
            raise errors.ConnectivityError('Graph is not connected.')

    _hypothesis('is_connected', connected)

    def cuts():
        ok, worst = check_cut_condition(graph, k, r)
        if not ok:
            raise errors.CutConditionError(
                'U = {} has a cut of {} edges.'.format(list(worst.vertices), worst.size)
            )

    _hypothesis('check_cut_condition', cuts)
    chain = constants.corollary13_constants(k, r)
    reduced = reduce_to_L(instance)
    count = len(reduced.vertices)
    # The dilated polytope is (1 / epsilon) (P - a)
    dilated = dto.VertexSet.create(
        reduced.vertices.dimension,
        (tuple(x / instance.epsilon for x in v) for v in reduced.vertices)
    )
    verdicts = {
        'regular': True,
        'degree_condition': True,
        'parity': True,
        'connected': True,
        'cut_condition': True,
        'dim_L_lower_bound': reduced.subspace.dimension >= reduced.subspace.lower_bound,
        'circumradius': circumradius_ok(dilated, chain.beta_eff, reduced.subspace.lower_bound),
    }
    stages = { 'polytope': 'skipped', 'enumeration': 'skipped', 'certification': 'skipped' }
    if graph.vertex_count <= toolkit_settings.POLYTOPE_MAX_VERTICES:
        verdicts['deep_point'] = deep_point_check(instance, tuple(Fraction(0) for _ in graph.edges))
    else:
        stages['deep_point'] = 'skipped'
    certified = None
    if reduced.system is not None:
        stages['polytope'] = 'built'
        verdicts['slab_containment'] = contains_slab_body(reduced.system, reduced.slabs)
        enumerated = enumerate_vertices(reduced.system)
        stages['enumeration'] = 'done'
        verdicts['oracle_equivalence'] = enumerated.points == reduced.vertices.points
        trials = config.trials or default_trials(reduced.subspace.dimension)
        certified = certify_vertex_count(reduced.system, trials, config.seed).distinct_vertices_found
        stages['certification'] = 'done'
    skipped = sorted(name for name, state in stages.items() if state == 'skipped')
    if skipped:
        logger.warning(
            '[%s] Skipped stages %s at |V| = %d', graph.name, ', '.join(skipped), graph.vertex_count
        )
    ratio = math.log2(count) / (chain.gamma_graph * graph.vertex_count) if count else 0.0
    if ratio < 1:
        logger.warning(
            '[%s] log2(count) / (gamma |V|) = %s is below 1 at this size', graph.name, ratio
        )
    return _report(config, {
        'graph': graph,
        'count': count,
        'certified_vertices': certified,
        'dim_L': reduced.subspace.dimension,
        'constants': chain,
        'gamma_graph': chain.gamma_graph,
        'ratio': ratio,
        'verdicts': verdicts,
        'hypotheses_ok': all(verdicts.values()),
        'stages': stages,
        'skipped_stages': skipped,
        'implementation_derived': True,
    })


def _seed(value):
    seed = int(value)
    if not 0 <= seed < 2 ** 64:
        raise argparse.ArgumentTypeError('seed must be a 64-bit unsigned integer')
    return seed


def _rational(value):
    try:
        return rational(value)
    except Exception:
        raise argparse.ArgumentTypeError("'{}' is not a rational number".format(value))


def _rational_list(value):
    return tuple(_rational(x) for x in value.split(','))


def build_parser():
    common = argparse.ArgumentParser(add_help = False)
    common.add_argument('--seed', type = _seed, help = '64-bit seed for randomized subcommands')
    common.add_argument('--trials', type = int, help = 'number of trials')
    common.add_argument('--format', choices = [f.value for f in dto.RunConfig.Format])
    common.add_argument('--json', action = 'store_true', help = 'shorthand for --format json')
    common.add_argument('--out', help = 'write the report to this file')
    common.add_argument('--config', help = 'YAML file with settings overrides')
    common.add_argument('--precision', type = int, help = 'mpmath precision in decimal digits')
    common.add_argument('-v', '--verbose', action = 'count', default = 0)
    common.add_argument('--quiet', action = 'store_true')

    parser = argparse.ArgumentParser(
        prog = 'vertex-bounds',
        description = 'Exact and randomized tools for lower bounds on polytope vertex counts.'
    )
    commands = parser.add_subparsers(dest = 'subcommand', metavar = 'subcommand')
    commands.required = True

    gamma = commands.add_parser('gamma', parents = [common], help = 'optimise gamma(alpha, beta)')
    gamma.add_argument('--alpha', type = _rational, required = True)
    gamma.add_argument('--beta', type = _rational, default = Fraction(1))
    gamma.add_argument('--variant', choices = constants.GAMMA_VARIANTS, default = 'printed')
    gamma.set_defaults(command = cmd_gamma)

    gamma_graph = commands.add_parser('gamma-graph', parents = [common], help = 'constants for r-factors')
    gamma_graph.add_argument('--k', type = int, required = True)
    gamma_graph.add_argument('--r', type = int, required = True)
    gamma_graph.add_argument('--radius', choices = constants.RADIUS_VARIANTS, default = 'triangle')
    gamma_graph.add_argument('--variant', choices = constants.GAMMA_VARIANTS, default = 'printed')
    gamma_graph.set_defaults(command = cmd_gamma_graph)

    certify = commands.add_parser('certify', parents = [common], help = 'certify vertices by Gaussian objectives')
    certify.add_argument('--polytope', required = True)
    certify.add_argument('--tau', type = float)
    certify.add_argument('--alpha', type = _rational)
    certify.add_argument('--beta', type = _rational)
    certify.set_defaults(command = cmd_certify, input_names = ['polytope'])

    lemma21 = commands.add_parser('lemma21', parents = [common], help = 'Monte Carlo checks of Gaussian bounds')
    lemma21.add_argument('--kind', choices = [k.value for k in dto.EmpiricalCheck.Kind], required = True)
    lemma21.add_argument('--n', type = int, default = 100)
    lemma21.add_argument('--m', type = int, default = 30)
    lemma21.add_argument('--epsilon', type = float, default = 0.5)
    lemma21.add_argument('--a', type = _rational_list, default = (Fraction(1), ))
    lemma21.add_argument('--tau', type = float, default = 0.0)
    lemma21.add_argument('--rho', type = float, default = 2.0)
    lemma21.add_argument('--slabs', help = 'YAML or JSON file with a list u of slab vectors')
    lemma21.set_defaults(command = cmd_lemma21, input_names = ['slabs'])

    rounding = commands.add_parser('round', parents = [common], help = 'round a symmetric polytope')
    rounding.add_argument('--polytope', required = True)
    rounding.set_defaults(command = cmd_round, input_names = ['polytope'])

    factors = commands.add_parser('factors', help = 'r-factor tools')
    factor_commands = factors.add_subparsers(dest = 'action', metavar = 'action')
    factor_commands.required = True
    count = factor_commands.add_parser('count', parents = [common])
    count.add_argument('--graph', required = True)
    count.add_argument('--r', type = int, required = True)
    count.set_defaults(command = cmd_factors_count, input_names = ['graph'])
    polytope = factor_commands.add_parser('polytope', parents = [common])
    polytope.add_argument('--graph', required = True)
    polytope.add_argument('--r', type = int, required = True)
    polytope.set_defaults(command = cmd_factors_polytope, input_names = ['graph'])

    graph = commands.add_parser('graph', help = 'graph hypothesis checks')
    graph_commands = graph.add_subparsers(dest = 'action', metavar = 'action')
    graph_commands.required = True
    check = graph_commands.add_parser('check', parents = [common])
    check.add_argument('--graph', required = True)
    check.add_argument('--k', type = int, required = True)
    check.add_argument('--r', type = int, required = True)
    check.set_defaults(command = cmd_graph_check, input_names = ['graph'])

    deep_point = commands.add_parser('deep-point', parents = [common], help = 'check the deep point')
    deep_point.add_argument('--graph', required = True)
    deep_point.add_argument('--k', type = int, required = True)
    deep_point.add_argument('--r', type = int, required = True)
    deep_point.add_argument('--y', help = 'JSON file {"y": [...]} with a perturbation')
    deep_point.add_argument('--random', type = int, help = 'number of random admissible perturbations')
    deep_point.set_defaults(command = cmd_deep_point, input_names = ['graph', 'y'])

    pipeline = commands.add_parser('pipeline', parents = [common], help = 'run the r-factor pipeline')
    pipeline.add_argument('--graph', required = True)
    pipeline.add_argument('--k', type = int, required = True)
    pipeline.add_argument('--r', type = int, required = True)
    pipeline.set_defaults(command = cmd_pipeline_graph, input_names = ['graph'])
    return parser


#: Arguments that are not subcommand options
GLOBAL_ARGUMENTS = {
    'seed', 'trials', 'format', 'json', 'out', 'config', 'precision', 'verbose', 'quiet',
    'subcommand', 'action', 'command', 'input_names',
}


def run_config(args):
    """
    Returns the :py:class:`~.dto.RunConfig` for parsed arguments.
    """
    names = getattr(args, 'input_names', [])
    inputs = { name: getattr(args, name) for name in names if getattr(args, name) is not None }
    options = {
        key: value
        for key, value in vars(args).items()
        if key not in GLOBAL_ARGUMENTS and key not in names
    }
    subcommand = args.subcommand if not getattr(args, 'action', None) else '{} {}'.format(
        args.subcommand, args.action
    )
    output_format = dto.RunConfig.Format(
        'json' if args.json or not args.format else args.format
    )
    return dto.RunConfig(
        subcommand,
        inputs,
        args.seed,
        args.trials,
        toolkit_settings.PRECISION_DIGITS,
        args.out,
        output_format,
        options
    )


def configure_logging(verbose, quiet):
    if quiet:
        level = logging.ERROR
    else:
        level = [logging.WARNING, logging.INFO, logging.DEBUG][min(verbose, 2)]
    logging.basicConfig(
        level = level,
        stream = sys.stderr,
        format = '%(asctime)s %(levelname)s %(name)s: %(message)s'
    )


@convert_errors
def run(args):
    if args.config:
        toolkit_settings.configure_from_yaml(args.config)
    if args.precision is not None:
        toolkit_settings.configure(**dict(toolkit_settings.as_dict(), PRECISION_DIGITS = args.precision))
    config = run_config(args)
    logger.info('Running %s', config.subcommand)
    report = args.command(config)
    ReportWriter(config.output, config.format).write(report)
    return 0


def main(argv = None):
    """
    Runs the command line interface and returns the exit code.
    """
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose, args.quiet)
    return run(args)
