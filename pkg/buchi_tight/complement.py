# -*- coding: utf-8 -*-
"""Rank-based complementation of Büchi automata.

Three constructions are provided, all explored breadth-first over reachable
states only:

    kv       level rankings with a cut-point set O for all even ranks at once
    tight    subset phase plus tight rankings; O tracks one even index i at a
             time and i cycles after every cut-point
    reduced  as tight, but entered through maximal rankings only, and with at
             most two successors per ranked state and letter
"""
# ==============================================================================
# Imports
# ==============================================================================
import logging
from time import perf_counter
from itertools import product
from collections import deque
from dataclasses import dataclass

from buchi_tight.helpers import format_set
from buchi_tight.nba import Nba, successors
from buchi_tight.rankings import (LevelRanking, bounded_successors,
                                  enumerate_maximal, enumerate_tight,
                                  is_level_ranking, is_s_tight, le_succ,
                                  max_ranking_successor, successor_bounds,
                                  tight_successors)


# ==============================================================================
# Globals
# ==============================================================================
LOG = logging.getLogger(__name__)

METHODS = ('kv', 'tight', 'reduced')


# ==============================================================================
# Exceptions
# ==============================================================================
class ConstructionTimeout(RuntimeError):
    """A construction ran past its deadline."""


# ==============================================================================
# Classes
# ==============================================================================
@dataclass(frozen=True)
class SubsetState(object):
    """Phase-1 state: the set of states reachable on the input so far."""

    S: frozenset

    def sort_key(self):
        return 0, tuple(sorted(self.S)), (), (), -1

    def label(self, n):
        return 'S={}'.format(format_set(self.S))


@dataclass(frozen=True)
class RankedState(object):
    """Phase-2 state (S, O, f, i); the kv construction leaves i as None."""

    S: frozenset
    O: frozenset
    f: LevelRanking
    i: int = None

    def sort_key(self):
        return (1, tuple(sorted(self.S)), tuple(sorted(self.O)),
                self.f.values, -1 if self.i is None else self.i)

    def label(self, n):
        text = 'S={} O={} {}'.format(format_set(self.S), format_set(self.O),
                                     self.f.label(n))
        if self.i is not None:
            text += ' i={}'.format(self.i)
        return text


@dataclass(frozen=True)
class PhaseCounts(object):
    q1: int
    q2: int


@dataclass(frozen=True)
class ComplementResult(object):
    """A complement automaton together with the states it was built from.

    'states' lists the SubsetState/RankedState behind every state index.
    """

    method: str
    automaton: Nba
    states: tuple
    state_labels: dict
    phase_counts: PhaseCounts
    edge_count: int


@dataclass(frozen=True)
class ConstructionStats(object):
    states: int
    edges: int
    q1: int
    q2: int
    per_letter_max_outdegree: int


# ==============================================================================
# Exploration
# ==============================================================================
def _explore(a, method, roots, step, timeout=None):
    """Breadth-first exploration with discovery-order numbering."""

    deadline = None if timeout is None else perf_counter() + timeout
    order = sorted(set(roots), key=lambda s: s.sort_key())
    index = {state: pos for pos, state in enumerate(order)}
    queue = deque(order)
    edges = []
    while queue:
        if deadline is not None and perf_counter() > deadline:
            raise ConstructionTimeout(
                "The '{}' construction exceeded {}s after {} states".format(
                    method, timeout, len(order)))
        state = queue.popleft()
        for letter in range(len(a.alphabet)):
            targets = sorted(set(step(state, letter)),
                             key=lambda s: s.sort_key())
            for target in targets:
                if target not in index:
                    index[target] = len(order)
                    order.append(target)
                    queue.append(target)
                edges.append((index[state], letter, index[target]))

    accepting = [pos for pos, state in enumerate(order)
                 if isinstance(state, SubsetState) and not state.S or
                 isinstance(state, RankedState) and not state.O]
    roots = set(roots)
    automaton = Nba.build(a.alphabet, len(order),
                          [pos for pos, state in enumerate(order)
                           if state in roots],
                          accepting, edges)
    q1 = sum(1 for state in order if isinstance(state, SubsetState))
    LOG.info("Method '%s': %d states (%d subset), %d edges", method,
             len(order), q1, len(edges))

    return ComplementResult(
        method=method,
        automaton=automaton,
        states=tuple(order),
        state_labels={pos: state.label(a.n) for pos, state in enumerate(order)},
        phase_counts=PhaseCounts(q1, len(order) - q1),
        edge_count=len(edges))


def cut_point_step(a, state, letter, f2):
    """Advance (S, O, f, i) to the successor carrying the ranking f2.

    With O empty the index moves on to (i+2) mod (rank+1) and O restarts as
    the states of that even value; otherwise i stays and O follows its
    successors that keep the value i.

    Returns:
        RankedState: The successor state.
    """

    target = successors(a, state.S, letter)
    if not state.O:
        index = (state.i + 2) % (state.f.rank + 1)
        tracked = f2.inverse(index)
    else:
        index = state.i
        tracked = successors(a, state.O, letter) & f2.inverse(index)

    return RankedState(target, tracked, f2, index)


def _subset_step(a, entries):
    cache = {}

    def _step(state, letter):
        target = successors(a, state.S, letter)
        yield SubsetState(target)
        if target not in cache:
            cache[target] = entries(a, target) if target else []
        for f in cache[target]:
            yield RankedState(target, frozenset(), f, 0)

    return _step


# ==============================================================================
# Constructions
# ==============================================================================
def kv_rank_cap(a):
    """Return 2·|Q∖F|, the largest value a kv ranking needs."""

    return 2 * (a.n - len(a.accepting))


def dominant_successors(a, bounds, base):
    """Enumerate the pointwise maximal rankings below 'bounds', one for every
    way of making states of 'base' odd.

    A kv state accepts every word a state with the same S and O and a
    pointwise smaller ranking accepts, and the next cut-point set depends
    only on which states of 'base' are odd.

    Args:
        a (Nba): The automaton (for the accepting states).
        bounds (dict of {int: int}): Upper bound per tracked state.
        base (frozenset): The states the next cut-point set is drawn from.

    Returns:
        generator of LevelRanking: The rankings, in a fixed order.
    """

    states = sorted(bounds)
    choices = []
    for q in states:
        h = bounds[q]
        if q in base and q not in a.accepting and h >= 1:
            choices.append(sorted({h - h % 2, h - 1 + h % 2}))
        else:
            choices.append([h])

    for values in product(*choices):
        yield LevelRanking(tuple(zip(states, values)))


def complement_kv(a, timeout=None, exhaustive=False):
    """Complement with arbitrary level rankings and a cut-point set.

    Rankings are kept on the tracked set S only. The empty-support state
    (∅, ∅, ∅) is an accepting sink for words without runs. By default the
    construction starts from the single ranking with value kv_rank_cap(a)
    on I and keeps only dominant successors. With 'exhaustive' it starts
    from every ranking of I with values up to 2n and keeps every successor
    below the bounds. Both accept the same language.

    Args:
        a (Nba): The automaton to complement.
        timeout (float): Seconds before ConstructionTimeout is raised.
        exhaustive (bool): Enumerate all initial and successor rankings.

    Returns:
        ComplementResult: The reachable complement automaton.
    """

    if exhaustive:
        top = {q: 2 * a.n for q in a.initial}
        roots = [RankedState(frozenset(a.initial), frozenset(), f)
                 for f in bounded_successors(a, top)]
    else:
        top = {q: kv_rank_cap(a) for q in a.initial}
        roots = [RankedState(frozenset(a.initial), frozenset(),
                             LevelRanking(top))]

    def _step(state, letter):
        target = successors(a, state.S, letter)
        bounds = successor_bounds(state.f, a, state.S, letter)
        base = successors(a, state.O, letter) if state.O else target
        if exhaustive:
            candidates = bounded_successors(a, bounds)
        else:
            candidates = dominant_successors(a, bounds, base)
        for f2 in candidates:
            yield RankedState(target, base - f2.odd(), f2)

    return _explore(a, 'kv', roots, _step, timeout)


def complement_tight(a, timeout=None):
    """Complement with tight rankings and a cyclic even-index cut-point.

    Args:
        a (Nba): The automaton to complement.
        timeout (float): Seconds before ConstructionTimeout is raised.

    Returns:
        ComplementResult: The reachable complement automaton.
    """

    subset_step = _subset_step(a, enumerate_tight)

    def _step(state, letter):
        if isinstance(state, SubsetState):
            return subset_step(state, letter)
        bounds = successor_bounds(state.f, a, state.S, letter)
        return [cut_point_step(a, state, letter, f2)
                for f2 in tight_successors(a, bounds, state.f.rank)]

    return _explore(a, 'tight', [SubsetState(frozenset(a.initial))], _step,
                    timeout)


def lower_tracked(a, f, tracked, keep_parity=False):
    """Decrement the values of the tracked states by one.

    The result is rejected (None) when it is no longer an S-tight level
    ranking of the same rank, which happens whenever an accepting state is
    tracked. With 'keep_parity' accepting states drop by two instead, to the
    next even value below.

    Args:
        a (Nba): The automaton.
        f (LevelRanking): The ranking chosen by the maximal successor.
        tracked (frozenset): The states to lower.
        keep_parity (bool): Lower accepting states by two.

    Returns:
        LevelRanking: The lowered ranking, or None when it is invalid.
    """

    mapping = f.as_dict()
    for q in tracked:
        step = 2 if q in a.accepting and keep_parity else 1
        mapping[q] -= step
        if mapping[q] < 0:
            return None
    lowered = LevelRanking(mapping)
    if not is_s_tight(lowered, a, f.domain) or lowered.rank != f.rank:
        return None

    return lowered


def complement_reduced(a, timeout=None, keep_parity=False):
    """Complement with maximal entry rankings and outdegree at most two.

    From a ranked state only the pointwise maximal tight successor is taken,
    plus the accepting variant of it in which the tracked states are
    decremented by one and O is emptied. The variant is dropped when the
    decrement does not give a valid ranking.

    Args:
        a (Nba): The automaton to complement.
        timeout (float): Seconds before ConstructionTimeout is raised.
        keep_parity (bool): Lower tracked accepting states by two so the
            accepting variant stays a level ranking.

    Returns:
        ComplementResult: The reachable complement automaton.
    """

    subset_step = _subset_step(a, enumerate_maximal)

    def _step(state, letter):
        if isinstance(state, SubsetState):
            return list(subset_step(state, letter))
        h = max_ranking_successor(state.f, a, state.S, letter)
        if h is None:
            return []
        maximal = cut_point_step(a, state, letter, h)
        result = [maximal]
        if maximal.i != 0 or not maximal.O:
            lowered = lower_tracked(a, h, maximal.O, keep_parity)
            if lowered is not None:
                result.append(RankedState(maximal.S, frozenset(), lowered,
                                          maximal.i))
        return result

    return _explore(a, 'reduced', [SubsetState(frozenset(a.initial))], _step,
                    timeout)


def complement(a, method, timeout=None):
    """Dispatch to one of the constructions by name.

    Raises:
        ValueError: Unknown method.
    """

    builders = {'kv': complement_kv,
                'tight': complement_tight,
                'reduced': complement_reduced}
    if method not in builders:
        raise ValueError("Unknown method '{}'; expected one of {}".format(
            method, ', '.join(METHODS)))

    return builders[method](a, timeout=timeout)


# ==============================================================================
# Inspection
# ==============================================================================
def construction_stats(result):
    """Count states, edges, phases and the ranked per-letter outdegree.

    Args:
        result (ComplementResult): The construction.

    Returns:
        ConstructionStats: Exact counts over the emitted automaton.
    """

    automaton = result.automaton
    outdegree = 0
    for pos, state in enumerate(result.states):
        if isinstance(state, RankedState):
            for letter in range(len(automaton.alphabet)):
                outdegree = max(outdegree, len(automaton.post(pos, letter)))

    return ConstructionStats(states=automaton.n,
                             edges=result.edge_count,
                             q1=result.phase_counts.q1,
                             q2=result.phase_counts.q2,
                             per_letter_max_outdegree=outdegree)


def encode_state(state, n):
    """Fold (S, O, f) into one function g over Q: -2 off S, -1 on O and f
    elsewhere.

    Returns:
        tuple of int: g(0), ..., g(n-1).
    """

    return tuple(-2 if q not in state.S else
                 -1 if q in state.O else
                 state.f[q]
                 for q in range(n))


def encoding_collisions(result, n):
    """Return pairs of ranked states that share an index and an encoding.

    Returns:
        list of tuple: Pairs of state indices; empty when the encoding is
            injective.
    """

    seen = {}
    collisions = []
    for pos, state in enumerate(result.states):
        if isinstance(state, RankedState) and state.i is not None:
            key = (state.i, encode_state(state, n))
            if key in seen:
                collisions.append((seen[key], pos))
            else:
                seen[key] = pos

    return collisions


def tight_admits(a, source, letter, target):
    """Decide whether the tight construction has the edge source -σ-> target.

    Args:
        a (Nba): The complemented automaton.
        source (SubsetState or RankedState): Origin.
        letter (int): The letter σ.
        target (SubsetState or RankedState): Destination.

    Returns:
        bool: Membership of the edge in the tight transition relation.
    """

    reached = successors(a, source.S, letter)
    if target.S != reached:
        return False
    if isinstance(source, SubsetState):
        if isinstance(target, SubsetState):
            return True
        return (not target.O and target.i == 0 and
                is_s_tight(target.f, a, reached))
    if isinstance(target, SubsetState):
        return False

    return (is_s_tight(target.f, a, reached) and
            target.f.rank == source.f.rank and
            le_succ(target.f, source.f, a, source.S, letter) and
            cut_point_step(a, source, letter, target.f) == target)


def invariant_violations(a, result):
    """List ranked states that break the state-space invariants.

    Tight and reduced states need an S-tight f, O ⊆ S, O ⊆ f⁻¹(i) and an even
    i below rank(f)+1; kv states need a level ranking on S and O ⊆ S.

    Returns:
        list of str: Labels of the offending states.
    """

    bad = []
    for state in result.states:
        if not isinstance(state, RankedState):
            continue
        if state.i is None:
            ok = (state.O <= state.S and state.f.domain == state.S and
                  is_level_ranking(state.f, a))
        else:
            ok = (is_s_tight(state.f, a, state.S) and state.O <= state.S and
                  state.O <= state.f.inverse(state.i) and
                  state.i % 2 == 0 and 0 <= state.i < state.f.rank + 1)
        if not ok:
            bad.append(state.label(a.n))

    return bad


def write_labels(result):
    """Render the sidecar label file, one 'index label' line per state."""

    return ''.join('{} {}\n'.format(pos, result.state_labels[pos])
                   for pos in sorted(result.state_labels))
