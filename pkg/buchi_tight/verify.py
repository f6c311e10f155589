# -*- coding: utf-8 -*-
"""Oracle cross-checks for the complement constructions and the run-DAG
rank theory."""
# ==============================================================================
# Imports
# ==============================================================================
import json
import random
import logging
import itertools
from collections import namedtuple
from dataclasses import dataclass, field

from buchi_tight.helpers import fingerprint
from buchi_tight.nba import (UPWord, format_word, intersect, is_empty,
                             membership, random_nba, remove_accepting,
                             remove_transition, serialize_nba, successors)
from buchi_tight.rankings import max_ranking_successor
from buchi_tight.rundag import (ProfileError, build_quotient, compute_ranks,
                                profile_from_ranks, shift_consistent)
from buchi_tight.complement import (METHODS, RankedState, complement,
                                    encoding_collisions, invariant_violations,
                                    tight_admits)


# ==============================================================================
# Globals
# ==============================================================================
LOG = logging.getLogger(__name__)

EXHAUSTIVE = 'exhaustive'
SAMPLED = 'sampled'

# Kinds of failure records, in report order.
KINDS = ('soundness', 'completeness', 'oracle', 'profile', 'agreement',
         'structure', 'encoding')

Failure = namedtuple('Failure', ['fingerprint', 'method', 'kind', 'word'])


# ==============================================================================
# Classes
# ==============================================================================
@dataclass(frozen=True)
class WordSuite(object):
    """The words a verification run is checked on.

    Exhaustive suites cover every word with |stem| <= max_stem and
    1 <= |period| <= max_period; sampled suites draw 'count' words from a
    generator seeded with 'seed'.
    """

    max_stem: int = 3
    max_period: int = 4
    mode: str = EXHAUSTIVE
    count: int = 100
    seed: int = 0

    def __post_init__(self):
        if self.max_stem < 0 or self.max_period < 1:
            raise ValueError("Word suite needs max_stem >= 0 and "
                             "max_period >= 1")
        if self.mode not in (EXHAUSTIVE, SAMPLED):
            raise ValueError("Unknown word suite mode '{}'".format(self.mode))


@dataclass
class VerifyReport(object):
    """Failures found by a verification run, one list per kind."""

    instances: int = 0
    soundness_failures: list = field(default_factory=list)
    completeness_failures: list = field(default_factory=list)
    oracle_disagreements: list = field(default_factory=list)
    profile_violations: list = field(default_factory=list)
    agreement_failures: list = field(default_factory=list)
    structure_violations: list = field(default_factory=list)
    encoding_collisions: list = field(default_factory=list)

    def _lists(self):
        return (self.soundness_failures, self.completeness_failures,
                self.oracle_disagreements, self.profile_violations,
                self.agreement_failures, self.structure_violations,
                self.encoding_collisions)

    @property
    def passed(self):
        return not any(self._lists())

    def failures(self):
        """Return every failure record, sorted."""
        return sorted(itertools.chain.from_iterable(self._lists()))

    def extend(self, other):
        """Fold another report into this one."""
        self.instances += other.instances
        for mine, theirs in zip(self._lists(), other._lists()):
            mine.extend(theirs)
            mine.sort()


# ==============================================================================
# Word suites
# ==============================================================================
def enumerate_words(k, suite):
    """Produce the words of a suite over an alphabet of k letters.

    Exhaustive order is by stem length, then period length, then
    lexicographic letter order.

    Args:
        k (int): Alphabet size.
        suite (WordSuite): Which words to produce.

    Returns:
        list of UPWord: The words.
    """

    if suite.mode == SAMPLED:
        rng = random.Random(suite.seed)
        words = []
        for _ in range(suite.count):
            stem = tuple(rng.randrange(k)
                         for _ in range(rng.randint(0, suite.max_stem)))
            period = tuple(rng.randrange(k)
                           for _ in range(rng.randint(1, suite.max_period)))
            words.append(UPWord(stem, period))
        return words

    return [UPWord(stem, period)
            for stem_length in range(suite.max_stem + 1)
            for period_length in range(1, suite.max_period + 1)
            for stem in itertools.product(range(k), repeat=stem_length)
            for period in itertools.product(range(k), repeat=period_length)]


def standard_suite(count=200, seed=0):
    """Return the seeded random automata of the acceptance run.

    Instances cycle through the cells n in 1..5, k in {1, 2},
    d in {1.0, 1.5} and fa in {0.25, 0.5}; instance j is drawn with seed
    'seed + j'.

    Returns:
        list of Nba: 'count' automata.
    """

    cells = list(itertools.product(range(1, 6), (1, 2), (1.0, 1.5),
                                   (0.25, 0.5)))

    return [random_nba(*cells[j % len(cells)], seed=seed + j)
            for j in range(count)]


# ==============================================================================
# Checks
# ==============================================================================
def check_soundness(a, method, result=None):
    """Decide L(a) ∩ L(complement) = ∅ exactly through product emptiness.
    """

    if result is None:
        result = complement(a, method)

    return is_empty(intersect(a, result.automaton))


def check_completeness(a, method, suite, result=None):
    """Return the suite words rejected by both a and its complement.

    Args:
        a (Nba): The automaton.
        method (str): Construction name.
        suite (WordSuite): Words to check.
        result (ComplementResult): A prebuilt complement to check instead.

    Returns:
        list of UPWord: The uncovered words; empty on success.
    """

    if result is None:
        result = complement(a, method)

    return [w for w in enumerate_words(len(a.alphabet), suite)
            if not membership(a, w) and not membership(result.automaton, w)]


def check_rank_oracle(a, suite):
    """Return the suite words on which the rank fixpoint and membership
    disagree."""

    bad = []
    for w in enumerate_words(len(a.alphabet), suite):
        ranks = compute_ranks(build_quotient(a, w), a.n)
        if (not ranks.survivors) == membership(a, w):
            bad.append(w)

    return bad


def check_tight_profile(a, suite):
    """Return the rejected suite words whose eventual profile is not an odd,
    tight rank on every cycle level.

    Accepted words and words whose runs die out are skipped.
    """

    bad = []
    for w in enumerate_words(len(a.alphabet), suite):
        g = build_quotient(a, w)
        try:
            profile = profile_from_ranks(g, compute_ranks(g, a.n))
        except ProfileError:
            continue
        if profile.dag_rank % 2 == 0 or not profile.per_cycle_level_tight:
            bad.append(w)

    return bad


def check_structure(a, result):
    """Check the state-space and edge properties of one construction.

    Every method: the ranked state invariants. tight/reduced: the rank stays
    constant along ranked edges. reduced: per-letter outdegree at most two,
    at most one maximal successor per letter, and every edge is an edge of
    the tight construction. kv: the cut-point set is recomputed from the
    predecessor on every ranked edge.

    Returns:
        list of str: Descriptions of the violations.
    """

    problems = ['invariant: {}'.format(label)
                for label in invariant_violations(a, result)]
    automaton = result.automaton
    states = result.states
    for pos, source in enumerate(states):
        if not isinstance(source, RankedState):
            continue
        for letter in range(len(automaton.alphabet)):
            targets = [states[t] for t in sorted(automaton.post(pos, letter))]
            where = '{} on {}'.format(source.label(a.n),
                                      automaton.alphabet.letters[letter])
            problems.extend(_edge_problems(a, result.method, source, letter,
                                           targets, where))

    return problems


def _edge_problems(a, method, source, letter, targets, where):
    problems = []
    if method == 'kv':
        reached = successors(a, source.O, letter) if source.O \
            else successors(a, source.S, letter)
        for target in targets:
            if target.O != reached - target.f.odd():
                problems.append('cut-point: {}'.format(where))
        return problems

    for target in targets:
        if target.f.rank != source.f.rank:
            problems.append('rank change: {}'.format(where))
    if method != 'reduced':
        return problems

    if len(targets) > 2:
        problems.append('outdegree {}: {}'.format(len(targets), where))
    h = max_ranking_successor(source.f, a, source.S, letter)
    if sum(1 for target in targets if target.f == h) > 1:
        problems.append('maximal successor not unique: {}'.format(where))
    for target in targets:
        if not tight_admits(a, source, letter, target):
            problems.append('edge outside tight: {}'.format(where))

    return problems


def detects_mutant(a, mutant, words):
    """Decide whether the harness rejects a faulty complement.

    Args:
        a (Nba): The original automaton.
        mutant (Nba): The fault-injected complement.
        words (list of UPWord): Words for the completeness check.

    Returns:
        bool: True when soundness or completeness fails for the mutant.
    """

    if not is_empty(intersect(a, mutant)):
        return True

    return any(not membership(a, w) and not membership(mutant, w)
               for w in words)


def mutants(result):
    """Yield (description, automaton) fault injections of a complement.

    Each accepting state is dropped from the accepting set in turn, then each
    transition is removed in turn.
    """

    automaton = result.automaton
    for q in sorted(automaton.accepting):
        yield 'accepting {}'.format(q), remove_accepting(automaton, q)
    for src, letter, dst in automaton.transitions():
        yield ('transition {} {} {}'.format(src, letter, dst),
               remove_transition(automaton, src, letter, dst))


# ==============================================================================
# Orchestration
# ==============================================================================
def verify_automaton(a, methods=METHODS, suite=None, timeout=None):
    """Run every check for one automaton.

    Args:
        a (Nba): The automaton.
        methods (iterable of str): Constructions to check.
        suite (WordSuite): Words to check; the exhaustive (3, 4) suite by
            default.
        timeout (float): Per-construction deadline in seconds.

    Returns:
        VerifyReport: The failures found.
    """

    suite = suite or WordSuite()
    key = fingerprint(serialize_nba(a))
    words = enumerate_words(len(a.alphabet), suite)
    report = VerifyReport(instances=1)

    def _record(target, method, kind, word=None):
        text = '' if word is None else format_word(word, a.alphabet)
        target.append(Failure(key, method, kind, text))

    accepted = {}
    for w in words:
        accepted[w] = membership(a, w)
        g = build_quotient(a, w)
        ranks = compute_ranks(g, a.n)
        if (not ranks.survivors) == accepted[w]:
            _record(report.oracle_disagreements, '', 'oracle', w)
        try:
            profile = profile_from_ranks(g, ranks)
        except ProfileError:
            continue
        if profile.dag_rank % 2 == 0 or not profile.per_cycle_level_tight:
            _record(report.profile_violations, '', 'profile', w)

    verdicts = {}
    for method in methods:
        result = complement(a, method, timeout=timeout)
        if not check_soundness(a, method, result):
            _record(report.soundness_failures, method, 'soundness')
        verdicts[method] = {w: membership(result.automaton, w) for w in words}
        for w in words:
            if not accepted[w] and not verdicts[method][w]:
                _record(report.completeness_failures, method,
                        'completeness', w)
        for problem in check_structure(a, result):
            report.structure_violations.append(
                Failure(key, method, 'structure', problem))
        for first, second in encoding_collisions(result, a.n):
            report.encoding_collisions.append(
                Failure(key, method, 'encoding',
                        '{} {}'.format(first, second)))

    for w in words:
        if len(set(verdicts[method][w] for method in verdicts)) > 1:
            _record(report.agreement_failures, ','.join(sorted(verdicts)),
                    'agreement', w)

    LOG.info("Verified %s: %d words, %s", key, len(words),
             'passed' if report.passed else 'FAILED')

    return report


def verify_many(automata, methods=METHODS, suite=None, timeout=None):
    """Run verify_automaton over several automata and merge the reports."""

    report = VerifyReport()
    for pos, a in enumerate(automata):
        LOG.debug("Instance %d: n=%d k=%d", pos, a.n, len(a.alphabet))
        report.extend(verify_automaton(a, methods, suite, timeout))

    return report


def shift_samples(automata, words, count=50, seed=0):
    """Check folded against unrolled ranks on sampled (automaton, word) pairs.

    Returns:
        list of tuple: The (automaton index, word) pairs that disagree.
    """

    rng = random.Random(seed)
    bad = []
    for _ in range(count):
        pos = rng.randrange(len(automata))
        a = automata[pos]
        pool = [w for w in words if all(x < len(a.alphabet)
                                        for x in w.stem + w.period)]
        w = pool[rng.randrange(len(pool))]
        if not shift_consistent(a, w):
            bad.append((pos, w))

    return bad


# ==============================================================================
# Reports
# ==============================================================================
def report_text(report):
    """Render a report for humans, one section per failure kind."""

    sections = (('soundness failures', report.soundness_failures),
                ('completeness failures', report.completeness_failures),
                ('oracle disagreements', report.oracle_disagreements),
                ('profile violations', report.profile_violations),
                ('agreement failures', report.agreement_failures),
                ('structure violations', report.structure_violations),
                ('encoding collisions', report.encoding_collisions))
    lines = ['instances: {}'.format(report.instances)]
    for title, failures in sections:
        lines.append('{}: {}'.format(title, len(failures)))
        for failure in sorted(failures):
            lines.append('  {} {} {}'.format(failure.fingerprint,
                                             failure.method or '-',
                                             failure.word or '-'))
    lines.append('PASSED' if report.passed else 'FAILED')

    return '\n'.join(lines) + '\n'


def report_records(report):
    """Render one JSON object per failure and line, sorted."""

    return ''.join(json.dumps(failure._asdict(), sort_keys=True) + '\n'
                   for failure in report.failures())
