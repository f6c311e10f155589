# -*- coding: utf-8 -*-
"""Run DAGs of ultimately periodic words, folded into a finite lasso, and the
alternating finite/endangered rank assignment on them."""
# ==============================================================================
# Imports
# ==============================================================================
import math
import logging
from collections import deque
from dataclasses import dataclass, field

import networkx as nx

from buchi_tight.nba import UPWord, successors
from buchi_tight.rankings import LevelRanking, is_tight


# ==============================================================================
# Globals
# ==============================================================================
LOG = logging.getLogger(__name__)

# Rank of vertices that stay in the fixpoint; compares above every integer.
SURVIVES = math.inf


# ==============================================================================
# Exceptions
# ==============================================================================
class ProfileError(ValueError):
    """The eventual rank profile was requested outside its domain."""


# ==============================================================================
# Classes
# ==============================================================================
@dataclass(frozen=True)
class RunDagQuotient(object):
    """The run DAG of a word folded at the first repeated period boundary.

    Levels are numbered 0..len(stem_levels)+len(cycle_levels)-1; the level
    after the last cycle level is the first cycle level. A vertex is a
    (state, level) pair.
    """

    stem_levels: tuple
    cycle_levels: tuple
    letters: tuple
    accepting: frozenset
    edges: dict = field(default=None, compare=False)

    @property
    def cycle_start(self):
        return len(self.stem_levels)

    @property
    def level_count(self):
        return len(self.stem_levels) + len(self.cycle_levels)

    def levels(self):
        """Return every level as a frozenset of vertices."""
        return self.stem_levels + self.cycle_levels

    def vertices(self):
        """Return all vertices sorted by (level, state)."""
        return sorted((v for level in self.levels() for v in level),
                      key=lambda v: (v[1], v[0]))

    def is_accepting(self, vertex):
        return vertex[0] in self.accepting

    def level_index(self, absolute):
        """Map an absolute level of the infinite DAG onto the quotient."""
        if absolute < self.cycle_start:
            return absolute
        return self.cycle_start + \
            (absolute - self.cycle_start) % len(self.cycle_levels)

    def graph(self):
        """Return the quotient as a networkx.DiGraph over its vertices."""
        graph = nx.DiGraph()
        graph.add_nodes_from(self.vertices())
        graph.add_edges_from((v, t) for v in self.vertices()
                             for t in sorted(self.edges.get(v, ())))
        return graph


@dataclass(frozen=True)
class RankAssignment(object):
    """Rank of every quotient vertex; SURVIVES marks the fixpoint."""

    quotient: RunDagQuotient
    rank: dict

    def rank_at(self, state, absolute):
        """Return the rank of (state, absolute level), None if the vertex
        does not exist."""
        return self.rank.get((state, self.quotient.level_index(absolute)))

    @property
    def survivors(self):
        return frozenset(v for v, r in self.rank.items() if r == SURVIVES)


@dataclass(frozen=True)
class Profile(object):
    """The eventual rank profile of a rejected word."""

    dag_rank: int
    per_cycle_level_tight: bool


# ==============================================================================
# Construction
# ==============================================================================
def build_quotient(a, w):
    """Fold the run DAG of a on w into a finite lasso.

    The reachable subsets are tracked through the stem and then sampled at
    every period boundary; at the first boundary whose subset was already
    seen, the levels from the earlier occurrence on form the cycle.

    Args:
        a (Nba): The automaton.
        w (UPWord): The word.

    Returns:
        RunDagQuotient: The quotient; the cycle length is a multiple of the
            period length.
    """

    level_sets = [frozenset(a.initial)]
    letters = []
    for letter in w.stem:
        letters.append(letter)
        level_sets.append(successors(a, level_sets[-1], letter))

    seen = {}
    while level_sets[-1] not in seen:
        seen[level_sets[-1]] = len(level_sets) - 1
        for letter in w.period:
            letters.append(letter)
            level_sets.append(successors(a, level_sets[-1], letter))

    start = seen[level_sets[-1]]
    end = len(level_sets) - 1
    levels = [frozenset((q, pos) for q in level_sets[pos])
              for pos in range(end)]

    edges = {}
    for pos in range(end):
        nxt = pos + 1 if pos + 1 < end else start
        for q in level_sets[pos]:
            edges[(q, pos)] = frozenset(
                (target, nxt) for target in a.post(q, letters[pos]))

    LOG.debug("Quotient with %d stem and %d cycle levels", start,
              end - start)

    return RunDagQuotient(tuple(levels[:start]), tuple(levels[start:]),
                          tuple(letters[:end]), frozenset(a.accepting),
                          edges)


def _backward_closure(graph, seeds):
    closure = set(seeds)
    queue = deque(seeds)
    while queue:
        node = queue.popleft()
        for pred in graph.predecessors(node):
            if pred not in closure:
                closure.add(pred)
                queue.append(pred)

    return closure


def _cyclic_vertices(graph):
    cyclic = set()
    for component in nx.strongly_connected_components(graph):
        node = next(iter(component))
        if len(component) > 1 or graph.has_edge(node, node):
            cyclic.update(component)

    return cyclic


def compute_ranks(g, n):
    """Run the alternating removal of finite and endangered vertices.

    Round i assigns rank i to the vertices that cannot reach a cycle of the
    residual graph and then rank i+1 to those that cannot reach (reflexively)
    an accepting vertex of what is left. The loop stops at the first round
    that removes nothing.

    Args:
        g (RunDagQuotient): The folded run DAG.
        n (int): State count of the automaton.

    Returns:
        RankAssignment: Ranks in {0..2n} or SURVIVES.

    Raises:
        RuntimeError: The fixpoint was not reached within 2n+2 rank values.
    """

    residual = g.graph()
    rank = {}
    current = 0
    while True:
        finite = set(residual) - _backward_closure(
            residual, _cyclic_vertices(residual))
        residual.remove_nodes_from(finite)
        endangered = set(residual) - _backward_closure(
            residual, [v for v in residual if g.is_accepting(v)])
        residual.remove_nodes_from(endangered)

        rank.update((v, current) for v in finite)
        rank.update((v, current + 1) for v in endangered)
        if not finite and not endangered:
            break

        current += 2
        if current > 2 * n + 2:
            raise RuntimeError("Rank fixpoint not reached after {} "
                               "rounds".format(current // 2))

    if any(value > 2 * n for value in rank.values()):
        raise RuntimeError("Rank above 2n={} assigned".format(2 * n))

    rank.update((v, SURVIVES) for v in residual)
    LOG.debug("Rank fixpoint after %d rounds, %d survivors",
              current // 2 + 1, len(residual))

    return RankAssignment(g, rank)


def rejects_by_rank(a, w):
    """Decide rejection of w through the rank fixpoint alone.

    Returns:
        bool: True iff no vertex survives the fixpoint.
    """

    ranks = compute_ranks(build_quotient(a, w), a.n)

    return not ranks.survivors


def eventual_profile(a, w):
    """Read the eventual rank profile of a rejected word off the cycle.

    Args:
        a (Nba): The automaton.
        w (UPWord): A word rejected by a that has infinite runs.

    Returns:
        Profile: The rank of the DAG and whether every cycle level is tight
            with that rank.

    Raises:
        ProfileError: The word is accepted, or the runs die out.
    """

    g = build_quotient(a, w)

    return profile_from_ranks(g, compute_ranks(g, a.n))


def profile_from_ranks(g, ranks):
    """Read the eventual profile off an already ranked quotient.

    Raises:
        ProfileError: Some vertex survives, or the cycle has no vertices.
    """

    if ranks.survivors or not any(g.cycle_levels):
        raise ProfileError("profile defined only for rejected words with "
                           "runs")

    dag_rank = max(ranks.rank[v] for level in g.cycle_levels for v in level)
    tight = True
    for level in g.cycle_levels:
        f = LevelRanking([(q, ranks.rank[(q, pos)]) for q, pos in level])
        tight = tight and is_tight(f) and f.rank == dag_rank

    return Profile(dag_rank, tight)


def unrolled_ranks(a, w, periods=None):
    """Compute ranks on the presentation stem·period^periods (period).

    The stem of the folded DAG then spans every level below
    |stem| + periods·|period| explicitly, which makes it an independent
    cross-check of the folding.

    Args:
        a (Nba): The automaton.
        w (UPWord): The word.
        periods (int): Number of unrolled periods, 2n+3 by default.

    Returns:
        RankAssignment: Ranks of the unrolled presentation.
    """

    if periods is None:
        periods = 2 * a.n + 3
    unrolled = UPWord(w.stem + w.period * periods, w.period)

    return compute_ranks(build_quotient(a, unrolled), a.n)


def shift_consistent(a, w, periods=None):
    """Compare folded and unrolled ranks on every explicitly unrolled level.
    """

    if periods is None:
        periods = 2 * a.n + 3
    folded = compute_ranks(build_quotient(a, w), a.n)
    unrolled = unrolled_ranks(a, w, periods)
    horizon = len(w.stem) + periods * len(w.period)

    return all(folded.rank_at(q, level) == unrolled.rank_at(q, level)
               for level in range(horizon) for q in a.states)


# ==============================================================================
# Export
# ==============================================================================
def _rank_text(value):
    return 'SURVIVES' if value == SURVIVES else str(value)


def quotient_to_dot(g, ranks=None):
    """Render a quotient as graphviz, one rank=same row per level.

    Args:
        g (RunDagQuotient): The quotient.
        ranks (RankAssignment): Optional rank annotations.

    Returns:
        str: The DOT text.
    """

    lines = ['digraph rundag {', '  rankdir=LR;']
    for pos, level in enumerate(g.levels()):
        names = []
        for q, _ in sorted(level):
            name = 'v{}_{}'.format(q, pos)
            label = '{},{}'.format(q, pos)
            if ranks is not None:
                label += '\\n' + _rank_text(ranks.rank[(q, pos)])
            shape = 'doublecircle' if q in g.accepting else 'circle'
            lines.append('  {} [label="{}", shape={}];'.format(
                name, label, shape))
            names.append(name)
        if names:
            lines.append('  {{ rank=same; {} }}'.format('; '.join(names)))
    for vertex in g.vertices():
        for q, pos in sorted(g.edges.get(vertex, ())):
            style = ' [style=dashed]' if pos <= vertex[1] else ''
            lines.append('  v{}_{} -> v{}_{}{};'.format(
                vertex[0], vertex[1], q, pos, style))
    lines.append('}')

    return '\n'.join(lines) + '\n'


def format_ranks(ranks):
    """Render 'level state rank' lines sorted by level then state."""

    return ['{} {} {}'.format(pos, q, _rank_text(ranks.rank[(q, pos)]))
            for q, pos in ranks.quotient.vertices()]
