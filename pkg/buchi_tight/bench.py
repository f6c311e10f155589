# -*- coding: utf-8 -*-
"""Size measurements of the complement constructions over seeded parameter
sweeps, reported next to the combinatorial bounds."""
# ==============================================================================
# Imports
# ==============================================================================
import io
import csv
import logging
import itertools
from time import perf_counter
from warnings import warn
from dataclasses import dataclass, asdict

from buchi_tight.helpers import (parse_flat_config, parse_float_list,
                                 parse_int_list)
from buchi_tight.nba import random_nba
from buchi_tight.rankings import count_tight, subset_factorial_ratio
from buchi_tight.complement import (METHODS, ConstructionTimeout, complement,
                                    construction_stats, encoding_collisions)
from buchi_tight.verify import check_soundness


# ==============================================================================
# Globals
# ==============================================================================
LOG = logging.getLogger(__name__)

CSV_COLUMNS = ('n', 'k', 'd', 'fa', 'seed', 'method', 'states', 'edges', 'q1',
               'q2', 'ms', 'tight_n', 'tight_n1', 'kv_bound', 'timeout')

MAX_OUTDEGREE = {'reduced': 2}


# ==============================================================================
# Classes
# ==============================================================================
@dataclass(frozen=True)
class BenchConfig(object):
    """A parameter sweep. Every tuple field is one axis of the grid."""

    n: tuple = (1, 2, 3)
    k: tuple = (1, 2)
    d: tuple = (1.0, 1.5)
    fa: tuple = (0.25, 0.5)
    instances: int = 2
    seed: int = 1
    methods: tuple = METHODS
    timeout: float = 30.0
    kv_max_n: int = 6
    max_n: int = 7

    def __post_init__(self):
        for name in ('n', 'k', 'd', 'fa', 'methods'):
            if not getattr(self, name):
                raise ValueError("Empty bench axis '{}'".format(name))
        unknown = set(self.methods) - set(METHODS)
        if unknown:
            raise ValueError("Unknown methods: {}".format(
                ', '.join(sorted(unknown))))
        if self.instances < 1:
            raise ValueError("instances must be at least 1")

    @classmethod
    def from_string(cls, text):
        """Build a sweep from a flat 'key = value' document.

        Args:
            text (str): The configuration text.

        Returns:
            BenchConfig: The sweep; absent keys keep their defaults.

        Raises:
            ValueError: Unknown keys or malformed values.
        """

        raw = parse_flat_config(text)
        parsers = {'n': parse_int_list,
                   'k': parse_int_list,
                   'd': parse_float_list,
                   'fa': parse_float_list,
                   'instances': int,
                   'seed': int,
                   'methods': lambda v: tuple(m.strip() for m in v.split(',')
                                              if m.strip()),
                   'timeout': float,
                   'kv_max_n': int,
                   'max_n': int}
        values = {}
        for key, value in raw.items():
            if key not in parsers:
                raise ValueError("Unknown bench key '{}'".format(key))
            try:
                values[key] = parsers[key](value)
            except ValueError as error:
                raise ValueError("Bad value for '{}': {}".format(key, error))

        return cls(**values)

    @classmethod
    def from_file(cls, path):
        """Read a sweep from a configuration file."""

        with open(path, encoding='utf-8') as handle:
            return cls.from_string(handle.read())


@dataclass(frozen=True)
class BenchRow(object):
    n: int
    k: int
    d: float
    fa: float
    seed: int
    method: str
    states: int
    edges: int
    q1: int
    q2: int
    ms: int
    tight_n: int
    tight_n1: int
    kv_bound: int
    timeout: int
    max_outdegree: int = 0

    def sort_key(self):
        return (self.n, self.k, self.d, self.fa, self.seed,
                METHODS.index(self.method))


# ==============================================================================
# Sweeps
# ==============================================================================
def _measure(a, method, params, timeout):
    bounds = dict(tight_n=count_tight(params['n']),
                  tight_n1=count_tight(params['n'] + 1),
                  kv_bound=(2 * params['n'] + 1) ** params['n'])
    start = perf_counter()
    try:
        result = complement(a, method, timeout=timeout)
    except ConstructionTimeout as error:
        warn(UserWarning("Timed out: {}".format(error)))
        return BenchRow(method=method, states=0, edges=0, q1=0, q2=0,
                        ms=int(round((perf_counter() - start) * 1000)),
                        timeout=1, **dict(params, **bounds))
    ms = int(round((perf_counter() - start) * 1000))

    if not check_soundness(a, method, result):
        raise RuntimeError("Method '{}' is unsound on {}".format(method,
                                                                params))
    if encoding_collisions(result, a.n):
        raise RuntimeError("State encoding of '{}' is not injective on "
                           "{}".format(method, params))
    stats = construction_stats(result)
    limit = MAX_OUTDEGREE.get(method)
    if limit is not None and stats.per_letter_max_outdegree > limit:
        raise RuntimeError("Method '{}' has outdegree {} on {}".format(
            method, stats.per_letter_max_outdegree, params))

    return BenchRow(method=method, states=stats.states, edges=stats.edges,
                    q1=stats.q1, q2=stats.q2, ms=ms, timeout=0,
                    max_outdegree=stats.per_letter_max_outdegree,
                    **dict(params, **bounds))


def run_suite(cfg):
    """Measure every method on every instance of a sweep.

    Instance j of a cell is random_nba(n, k, d, fa, cfg.seed + j). The kv
    method is skipped above cfg.kv_max_n states and sizes above cfg.max_n are
    dropped with a warning.

    Args:
        cfg (BenchConfig): The sweep.

    Returns:
        list of BenchRow: Rows sorted by parameters, then method.

    Raises:
        RuntimeError: A complement failed its soundness, encoding or
            outdegree check.
    """

    sizes = [n for n in cfg.n if n <= cfg.max_n]
    if len(sizes) != len(cfg.n):
        warn(UserWarning("Dropping sizes above max_n={}".format(cfg.max_n)))

    rows = []
    for n, k, d, fa in itertools.product(sizes, cfg.k, cfg.d, cfg.fa):
        for j in range(cfg.instances):
            params = dict(n=n, k=k, d=d, fa=fa, seed=cfg.seed + j)
            a = random_nba(**params)
            for method in cfg.methods:
                if method == 'kv' and n > cfg.kv_max_n:
                    continue
                row = _measure(a, method, params, cfg.timeout)
                LOG.debug("%s", row)
                rows.append(row)
        LOG.info("Cell n=%d k=%d d=%s fa=%s done", n, k, d, fa)

    return sorted(rows, key=BenchRow.sort_key)


# ==============================================================================
# Reports
# ==============================================================================
def _csv_text(rows):
    handle = io.StringIO()
    writer = csv.writer(handle, lineterminator='\n')
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        record = asdict(row)
        writer.writerow([record[column] for column in CSV_COLUMNS])

    return handle.getvalue()


def _stat(values, how):
    if not values:
        return '-'
    if how == 'max':
        return str(max(values))

    return '{:.1f}'.format(float(sum(values)) / len(values))


def _markdown_text(rows):
    lines = ['# Construction sizes']
    header = ('| n | k | d | fa | runs | timeouts | states mean | states max '
              '| edges mean | edges max | q2 mean | q2 max | 2^n n!/tight(n) |')
    for method in METHODS:
        selected = [row for row in rows if row.method == method]
        if not selected:
            continue
        lines.extend(['', '## {}'.format(method), '', header,
                      '|' + '---|' * header.count('|', 1)])
        cells = itertools.groupby(selected,
                                  key=lambda r: (r.n, r.k, r.d, r.fa))
        for (n, k, d, fa), group in cells:
            group = list(group)
            done = [row for row in group if not row.timeout]
            cells_text = [str(n), str(k), str(d), str(fa), str(len(group)),
                          str(len(group) - len(done))]
            for name in ('states', 'edges', 'q2'):
                values = [getattr(row, name) for row in done]
                cells_text.extend([_stat(values, 'mean'),
                                   _stat(values, 'max')])
            cells_text.append('{:.3f}'.format(subset_factorial_ratio(n)))
            lines.append('| ' + ' | '.join(cells_text) + ' |')

    return '\n'.join(lines) + '\n'


def emit_report(rows):
    """Render rows as CSV and as per-method markdown tables.

    Args:
        rows (list of BenchRow): Rows in emission order.

    Returns:
        tuple of str: (csv_text, markdown_text).
    """

    rows = sorted(rows, key=BenchRow.sort_key)

    return _csv_text(rows), _markdown_text(rows)
