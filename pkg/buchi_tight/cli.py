# -*- coding: utf-8 -*-
"""The 'buchi-tight' command line.

Exit codes: 0 for success or a positive verdict, 1 for a negative verdict
(rejected word, failed verification) and 2 for usage, input or parse errors.
"""
# ==============================================================================
# Imports
# ==============================================================================
import sys
import logging
import argparse

from buchi_tight import __version__
from buchi_tight.nba import (membership, parse_nba, parse_word, random_nba,
                             serialize_nba, size, to_dot, transition_count)
from buchi_tight.rankings import count_maximal, count_tight, kappa_ratios
from buchi_tight.rundag import (build_quotient, compute_ranks, format_ranks,
                                quotient_to_dot)
from buchi_tight.complement import (METHODS, ConstructionTimeout, complement,
                                    construction_stats, write_labels)
from buchi_tight.verify import (EXHAUSTIVE, SAMPLED, WordSuite,
                                report_records, report_text, verify_automaton)
from buchi_tight.bench import BenchConfig, emit_report, run_suite


# ==============================================================================
# Globals
# ==============================================================================
LOG = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


# ==============================================================================
# Helpers
# ==============================================================================
def _read(path):
    with open(path, encoding='utf-8') as handle:
        return handle.read()


def _write(path, text):
    with open(path, 'w', encoding='utf-8', newline='\n') as handle:
        handle.write(text)


def _methods(value):
    methods = tuple(m.strip() for m in value.split(',') if m.strip())
    for method in methods:
        if method not in METHODS:
            raise argparse.ArgumentTypeError(
                "unknown method '{}'".format(method))
    if not methods:
        raise argparse.ArgumentTypeError("no methods given")

    return methods


# ==============================================================================
# Commands
# ==============================================================================
def _complement(args, out):
    a = parse_nba(_read(args.input))
    result = complement(a, args.method, timeout=args.timeout)
    _write(args.output, serialize_nba(result.automaton))
    if args.labels:
        _write(args.labels, write_labels(result))
    if args.dot:
        _write(args.dot, to_dot(result.automaton))
    if args.stats:
        stats = construction_stats(result)
        out.write('states={} edges={} q1={} q2={} max_outdegree={}\n'.format(
            stats.states, stats.edges, stats.q1, stats.q2,
            stats.per_letter_max_outdegree))

    return EXIT_OK


def _verify(args, out):
    a = parse_nba(_read(args.input))
    if args.sample:
        suite = WordSuite(args.max_stem, args.max_period, SAMPLED,
                          args.sample, args.seed)
    else:
        suite = WordSuite(args.max_stem, args.max_period, EXHAUSTIVE)
    report = verify_automaton(a, args.methods, suite)
    out.write(report_text(report))
    if args.report:
        _write(args.report, report_records(report))

    return EXIT_OK if report.passed else EXIT_NEGATIVE


def _member(args, out):
    a = parse_nba(_read(args.input))
    accepted = membership(a, parse_word(args.word, a.alphabet))
    out.write('accepted\n' if accepted else 'rejected\n')

    return EXIT_OK if accepted else EXIT_NEGATIVE


def _rankdag(args, out):
    a = parse_nba(_read(args.input))
    g = build_quotient(a, parse_word(args.word, a.alphabet))
    ranks = compute_ranks(g, a.n)
    for line in format_ranks(ranks):
        out.write(line + '\n')
    out.write('accepted\n' if ranks.survivors else 'rejected\n')
    if args.dot:
        _write(args.dot, quotient_to_dot(g, ranks))

    return EXIT_OK


def _count_tight(args, out):
    if args.ratios:
        for n, count, ratio in kappa_ratios(args.n):
            out.write('{} {} {:.4f}\n'.format(n, count, ratio))
    else:
        out.write('{}\n'.format(count_tight(args.n)))

    return EXIT_OK


def _count_maximal(args, out):
    out.write('{}\n'.format(count_maximal(args.m)))

    return EXIT_OK


def _gen(args, out):
    n, k, d, fa, seed = args.random
    a = random_nba(int(n), int(k), float(d), float(fa), int(seed))
    text = serialize_nba(a)
    if args.out:
        _write(args.out, text)
    else:
        out.write(text)

    return EXIT_OK


def _stats(args, out):
    a = parse_nba(_read(args.input))
    out.write('states={} initial={} accepting={} transitions={} '
              'size={}\n'.format(a.n, len(a.initial), len(a.accepting),
                                 transition_count(a), size(a)))

    return EXIT_OK


def _bench(args, out):
    rows = run_suite(BenchConfig.from_file(args.config))
    csv_text, markdown_text = emit_report(rows)
    _write(args.out, csv_text)
    if args.markdown:
        _write(args.markdown, markdown_text)
    out.write('{} rows written to {}\n'.format(len(rows), args.out))

    return EXIT_OK


# ==============================================================================
# Parser
# ==============================================================================
def build_parser():
    """Create the argument parser with one subparser per command."""

    parser = argparse.ArgumentParser(
        prog='buchi-tight',
        description='Rank-based complementation of Büchi automata.')
    parser.add_argument('--version', action='version', version=__version__)
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='INFO with -v, DEBUG with -vv')
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    sub = commands.add_parser('complement', help='complement an automaton')
    sub.add_argument('--method', choices=METHODS, required=True)
    sub.add_argument('-i', '--input', required=True)
    sub.add_argument('-o', '--output', required=True)
    sub.add_argument('--labels', help='write the state label sidecar file')
    sub.add_argument('--dot', help='write the complement as graphviz')
    sub.add_argument('--stats', action='store_true')
    sub.add_argument('--timeout', type=float, default=None)
    sub.set_defaults(handler=_complement)

    sub = commands.add_parser('verify', help='cross-check the complements')
    sub.add_argument('-i', '--input', required=True)
    sub.add_argument('--methods', type=_methods, default=METHODS)
    sub.add_argument('--max-stem', type=int, default=3)
    sub.add_argument('--max-period', type=int, default=4)
    sub.add_argument('--sample', type=int, default=0,
                     help='check N sampled words instead of all of them')
    sub.add_argument('--seed', type=int, default=0)
    sub.add_argument('--report', help='write failure records as JSON lines')
    sub.set_defaults(handler=_verify)

    sub = commands.add_parser('member', help='decide word membership')
    sub.add_argument('-i', '--input', required=True)
    sub.add_argument('--word', required=True)
    sub.set_defaults(handler=_member)

    sub = commands.add_parser('rankdag', help='rank the run DAG of a word')
    sub.add_argument('-i', '--input', required=True)
    sub.add_argument('--word', required=True)
    sub.add_argument('--dot')
    sub.set_defaults(handler=_rankdag)

    sub = commands.add_parser('count-tight', help='print tight(N)')
    sub.add_argument('n', type=int, metavar='N')
    sub.add_argument('--ratios', action='store_true',
                     help='print n, tight(n) and tight(n)^(1/n)/n up to N')
    sub.set_defaults(handler=_count_tight)

    sub = commands.add_parser('count-maximal',
                              help='print the number of maximal rankings')
    sub.add_argument('m', type=int, metavar='M')
    sub.set_defaults(handler=_count_maximal)

    sub = commands.add_parser('gen', help='generate a random automaton')
    sub.add_argument('--random', nargs=5, required=True,
                     metavar=('N', 'K', 'D', 'FA', 'SEED'))
    sub.add_argument('--out')
    sub.set_defaults(handler=_gen)

    sub = commands.add_parser('stats', help='print automaton sizes')
    sub.add_argument('-i', '--input', required=True)
    sub.set_defaults(handler=_stats)

    sub = commands.add_parser('bench', help='run a parameter sweep')
    sub.add_argument('--config', required=True)
    sub.add_argument('--out', required=True)
    sub.add_argument('--markdown')
    sub.set_defaults(handler=_bench)

    return parser


def main(argv=None, out=None):
    """Run the command line.

    Args:
        argv (list of str): Arguments without the program name; sys.argv by
            default.
        out (file): Stream for results; sys.stdout by default.

    Returns:
        int: The exit code.
    """

    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return error.code if isinstance(error.code, int) else EXIT_USAGE

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose,
                                                       logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')

    LOG.debug("Running '%s'", args.command)
    try:
        return args.handler(args, out)
    except ConstructionTimeout as error:
        sys.stderr.write('buchi-tight {}: {}\n'.format(args.command, error))
        return EXIT_NEGATIVE
    except (ValueError, OSError) as error:
        sys.stderr.write('buchi-tight {}: {}\n'.format(args.command, error))
        return EXIT_USAGE
