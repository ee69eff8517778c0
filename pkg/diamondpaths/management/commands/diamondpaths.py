"""
The diamondpaths command: graph generation, path computation, constructive extraction and the
verification experiments. Graphs are read as edge lists from standard input unless --input
names a file. Every output is deterministic; reports leave out wall-clock time unless --timing.

Exit status: 0 success, 1 counterexample (or report drift with --record), 2 usage or input
error, 3 unmet precondition.
"""
import argparse
import logging
import sys

from django.core.management.base import BaseCommand, CommandError

from diamondpaths.config import format_registry, get_setting
from diamondpaths.connectivity import max_edge_disjoint_paths, max_independent_paths, oracle_max_independent
from diamondpaths.constants import (
    DOT, EDGE_LIST, EXIT_COUNTEREXAMPLE, EXIT_PRECONDITION, EXIT_USAGE,
)
from diamondpaths.construct import find_three_independent, find_two_independent
from diamondpaths.diamond import diamond_counts, generate_diamond
from diamondpaths.exceptions import InputError, OrderTooLargeError, PreconditionError
from diamondpaths.experiments import (
    DEFAULT_FRACTIONS, f_table, verify_diamond_family, verify_lemma1, verify_lemma2, verify_oracle,
    verify_two_paths,
)
from diamondpaths.formats import dump_json, parse_graph, serialize_graph
from diamondpaths.models import VerificationReport
from diamondpaths.prng import as_fraction


LOG = logging.getLogger(__name__)

# Django verbosity -> level of the diamondpaths logger
LOG_LEVELS = {
    0: logging.WARNING,
    1: logging.WARNING,
    2: logging.INFO,
    3: logging.DEBUG,
}


def probability(value):
    try:
        return str(as_fraction(value))
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def non_negative(value):
    number = int(value)
    if number < 0:
        raise argparse.ArgumentTypeError('must be non-negative, got {0}'.format(value))
    return number


def positive(value):
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError('must be positive, got {0}'.format(value))
    return number


class Command(BaseCommand):
    """
    Computes disjoint path systems and runs the verification experiments.
    """
    help = 'Disjoint paths, recursive diamond graphs and the f(k) verification experiments.'

    requires_system_checks = []

    # Set by run_cli; falls back to the process standard input
    stdin = None

    def add_arguments(self, parser):
        commands = parser.add_subparsers(dest='command', required=True)

        diamond = commands.add_parser('diamond', help='Generate the recursive diamond graph G_p.')
        diamond.add_argument('--order', type=non_negative, required=True)
        output = diamond.add_mutually_exclusive_group()
        output.add_argument('--format', choices=format_registry.names, default=EDGE_LIST)
        output.add_argument('--counts-only', action='store_true')

        paths = commands.add_parser('paths', help='Maximum path systems between two vertices.')
        path_kinds = paths.add_subparsers(dest='action', required=True)
        edge_disjoint = path_kinds.add_parser('edge-disjoint')
        edge_disjoint.add_argument('--source', required=True)
        edge_disjoint.add_argument('--sink', required=True)
        independent = path_kinds.add_parser('independent')
        independent.add_argument('--from', dest='from_vertex', required=True)
        independent.add_argument('--to', dest='to_vertex', required=True)
        self.add_graph_input_arguments(edge_disjoint, independent)

        construct = commands.add_parser('construct', help='Independent paths from edge-disjoint ones.')
        constructions = construct.add_subparsers(dest='action', required=True)
        construct_parsers = [constructions.add_parser(name) for name in ('two', 'three')]
        for construct_parser in construct_parsers:
            construct_parser.add_argument('--source', required=True)
            construct_parser.add_argument('--sink', required=True)
        self.add_graph_input_arguments(*construct_parsers)

        verify = commands.add_parser('verify', help='Run a verification experiment.')
        experiments = verify.add_subparsers(dest='action', required=True)

        lemma1 = experiments.add_parser('lemma1')
        lemma1.add_argument('--k', type=positive, default=3)
        two_paths = experiments.add_parser('two-paths')
        for planted in (lemma1, two_paths):
            planted.add_argument('--trials', type=positive, default=1000)
            planted.add_argument('--seed', type=non_negative, default=0)
            planted.add_argument('--n', dest='n_max', type=positive, default=60)
            planted.add_argument('--extra', nargs='+', type=probability, default=list(DEFAULT_FRACTIONS))

        lemma2 = experiments.add_parser('lemma2')
        lemma2.add_argument('--order', type=non_negative, required=True)
        lemma2.add_argument('--allow-large', action='store_true')

        oracle = experiments.add_parser('oracle')
        oracle.add_argument('--trials', type=positive, default=500)
        oracle.add_argument('--seed', type=non_negative, default=0)
        oracle.add_argument('--n', dest='n_max', type=positive, default=8)
        oracle.add_argument('--edge-probability', type=probability, default='0.4')

        family = experiments.add_parser('diamond')
        family.add_argument('--max-order', type=non_negative, default=5)

        table = commands.add_parser('f-table', help='Tabulate f(k) with lower and upper witnesses.')
        table.add_argument('--k-max', type=positive, required=True)
        table.add_argument('--seed', type=non_negative, default=0)

        for report_parser in (lemma1, two_paths, lemma2, oracle, family, table):
            report_parser.add_argument('--timing', action='store_true')
            report_parser.add_argument('--record', action='store_true')

        oracle_pair = commands.add_parser('oracle', help='Brute-force independent path count of a small graph.')
        oracle_pair.add_argument('--from', dest='from_vertex', required=True)
        oracle_pair.add_argument('--to', dest='to_vertex', required=True)
        self.add_graph_input_arguments(oracle_pair)

    def add_graph_input_arguments(self, *parsers):
        for parser in parsers:
            parser.add_argument('--input', help='Read the graph from this file instead of standard input.')
            parser.add_argument('--input-format', choices=format_registry.parsable_names, default=EDGE_LIST)
            parser.add_argument('--collapse', action='store_true', help='Merge repeated edges.')

    def handle(self, *args, **options):
        logging.getLogger('diamondpaths').setLevel(LOG_LEVELS.get(options['verbosity'], logging.DEBUG))

        handler = getattr(self, 'handle_{0}'.format(options['command'].replace('-', '_')))
        try:
            handler(options)
        except InputError as e:
            raise CommandError(str(e), returncode=EXIT_USAGE)
        except PreconditionError as e:
            raise CommandError(str(e), returncode=EXIT_PRECONDITION)
        except ValueError as e:
            raise CommandError(str(e), returncode=EXIT_USAGE)

    def write(self, text):
        self.stdout.write(text, ending='')

    def read_graph(self, options):
        if options['input']:
            try:
                with open(options['input'], 'r') as input_file:
                    text = input_file.read()
            except OSError as e:
                raise CommandError('cannot read {0}: {1}'.format(options['input'], e.strerror), returncode=EXIT_USAGE)
        else:
            text = (self.stdin or sys.stdin).read()

        return parse_graph(text, format=options['input_format'], collapse=options['collapse'])

    def handle_diamond(self, options):
        p = options['order']
        if options['counts_only']:
            vertices, edges, edge_disjoint = diamond_counts(p)
            self.write(dump_json({
                'order': p,
                'vertices': vertices,
                'edges': edges,
                'edge_disjoint_paths': edge_disjoint,
            }))
            return

        if options['format'] == DOT and p > get_setting('DOT_MAX_ORDER'):
            raise OrderTooLargeError(p, get_setting('DOT_MAX_ORDER'))

        g, _ = generate_diamond(p)
        self.write(serialize_graph(g, format=options['format']))

    def handle_paths(self, options):
        g = self.read_graph(options)
        if options['action'] == 'edge-disjoint':
            self.write(dump_json(max_edge_disjoint_paths(g, options['source'], options['sink']).to_dict()))
        else:
            system, certificate = max_independent_paths(g, options['from_vertex'], options['to_vertex'])
            self.write(dump_json({'paths': system.to_dict(), 'certificate': certificate.to_dict()}))

    def handle_construct(self, options):
        g = self.read_graph(options)
        construct = find_two_independent if options['action'] == 'two' else find_three_independent
        self.write(dump_json(construct(g, options['source'], options['sink']).to_dict()))

    def handle_oracle(self, options):
        g = self.read_graph(options)
        u, v = options['from_vertex'], options['to_vertex']
        self.write(dump_json({'u': u, 'v': v, 'independent_paths': oracle_max_independent(g, u, v)}))

    def handle_verify(self, options):
        action = options['action']
        if action == 'lemma1':
            report = verify_lemma1(
                options['trials'], options['seed'], n_max=options['n_max'], fractions=options['extra'], k=options['k'])
        elif action == 'two-paths':
            report = verify_two_paths(
                options['trials'], options['seed'], n_max=options['n_max'], fractions=options['extra'])
        elif action == 'lemma2':
            report = verify_lemma2(options['order'], allow_large=options['allow_large'])
        elif action == 'oracle':
            report = verify_oracle(
                options['trials'], options['seed'], n_max=options['n_max'],
                edge_probability=options['edge_probability'],
            )
        else:
            report = verify_diamond_family(options['max_order'])

        self.emit_report(report, options)

    def handle_f_table(self, options):
        self.emit_report(f_table(options['k_max'], seed=options['seed']), options)

    def emit_report(self, report, options):
        self.write(dump_json(report.to_dict(include_timing=options['timing'])))

        drifted = VerificationReport.objects.record(report) if options['record'] else []
        if not report.ok:
            raise CommandError(
                '{0}: {1} counterexample(s)'.format(report.experiment, len(report.counterexamples)),
                returncode=EXIT_COUNTEREXAMPLE,
            )
        if drifted:
            raise CommandError(
                '{0}: replay differs from the recorded report {1}'.format(report.experiment, drifted[0]),
                returncode=EXIT_COUNTEREXAMPLE,
            )
