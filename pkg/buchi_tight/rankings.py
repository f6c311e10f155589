# -*- coding: utf-8 -*-
"""Level rankings: tightness, the successor order, maximal rankings,
bounded enumeration and the counting functions for tight rankings."""
# ==============================================================================
# Imports
# ==============================================================================
import math
import itertools
from dataclasses import dataclass, field

from buchi_tight.nba import successors


# ==============================================================================
# Globals
# ==============================================================================
ARBITRARY = 'arbitrary'
TIGHT = 'tight'
S_TIGHT = 'S-tight'
MAXIMAL = 'maximal'


# ==============================================================================
# Exceptions
# ==============================================================================
class RankingError(ValueError):
    """A ranking operation was applied outside its domain."""


# ==============================================================================
# Classes
# ==============================================================================
@dataclass(frozen=True)
class LevelRanking(object):
    """A partial map from tracked states to ranks, stored as sorted
    (state, value) pairs. States outside the domain are implicitly 1."""

    values: tuple
    _map: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        pairs = self.values.items() if isinstance(self.values, dict) \
            else self.values
        pairs = tuple(sorted((int(q), int(v)) for q, v in pairs))
        mapping = dict(pairs)
        if len(mapping) != len(pairs):
            raise RankingError("Duplicate states in {}".format(pairs))
        if any(v < 0 for v in mapping.values()):
            raise RankingError("Negative rank in {}".format(pairs))

        object.__setattr__(self, 'values', pairs)
        object.__setattr__(self, '_map', mapping)

    def __getitem__(self, q):
        return self._map[q]

    def __len__(self):
        return len(self.values)

    def get(self, q, default=None):
        return self._map.get(q, default)

    def as_dict(self):
        return dict(self._map)

    @property
    def domain(self):
        """frozenset: The tracked states S."""
        return frozenset(self._map)

    @property
    def rank(self):
        """int: The maximal value, None for the empty support."""
        return max(self._map.values()) if self._map else None

    def odd(self):
        """Return the states carrying an odd value."""
        return frozenset(q for q, v in self.values if v % 2)

    def inverse(self, value):
        """Return the states mapped to 'value'."""
        return frozenset(q for q, v in self.values if v == value)

    def label(self, n):
        """Render 'f=[2,1,-]' over the states 0..n-1."""
        cells = [str(self._map[q]) if q in self._map else '-'
                 for q in range(n)]
        return 'f=[{}]'.format(','.join(cells))


# ==============================================================================
# Predicates
# ==============================================================================
def is_level_ranking(f, a):
    """Test the value range {0..2n} and the even values on accepting states.
    """

    return all(0 <= q < a.n and 0 <= v <= 2 * a.n and
               not (q in a.accepting and v % 2)
               for q, v in f.values)


def is_tight(f):
    """Test whether a ranking has an odd rank r and attains every odd value
    up to r.

    Args:
        f (LevelRanking): The ranking.

    Returns:
        bool: Tightness of the ranking over its domain.

    Raises:
        RankingError: The domain is empty.
    """

    if not f.values:
        raise RankingError("tightness undefined for empty support")

    rank = f.rank
    attained = set(v for _, v in f.values)

    return rank % 2 == 1 and all(o in attained for o in range(1, rank, 2))


def is_s_tight(f, a, states):
    """Test whether f is a tight level ranking with domain exactly S."""

    return (bool(f.values) and f.domain == frozenset(states) and
            is_level_ranking(f, a) and is_tight(f))


def is_maximal(f, a, states):
    """Test maximality over S: accepting states at r-1, one state per odd
    value below r, every other state at r."""

    if not is_s_tight(f, a, states):
        return False

    rank = f.rank
    for q, v in f.values:
        if q in a.accepting and v != rank - 1:
            return False
        if q not in a.accepting and v % 2 == 0:
            return False

    return all(len(f.inverse(o)) == 1 for o in range(1, rank, 2))


def classify(f, a, states):
    """Return the strongest tightness class of f with respect to S."""

    if is_maximal(f, a, states):
        return MAXIMAL
    if is_s_tight(f, a, states):
        return S_TIGHT
    if f.values and is_tight(f):
        return TIGHT

    return ARBITRARY


def le_succ(f2, f1, a, states, letter):
    """Decide f2 ≤^S_σ f1: every σ-successor q' of a state q in S satisfies
    f2(q') ≤ f1(q).

    Args:
        f2 (LevelRanking): Candidate successor ranking, defined on δ(S, σ).
        f1 (LevelRanking): Source ranking, defined on S.
        a (Nba): The automaton.
        states (iterable of int): The set S.
        letter (int): The letter σ.

    Returns:
        bool: Whether the order holds.

    Raises:
        RankingError: f1 does not cover S or f2 is not defined exactly on
            δ(S, σ).
    """

    states = frozenset(states)
    target = successors(a, states, letter)
    if not states <= f1.domain or f2.domain != target:
        raise RankingError("domain mismatch with δ(S,σ)={}".format(
            sorted(target)))

    return all(f2[t] <= f1[q]
               for q in states for t in a.post(q, letter))


def successor_bounds(f, a, states, letter):
    """Compute the pointwise upper bound of every successor ranking.

    h(q') is the least value f(q) over the predecessors q in S of q',
    lowered to the next even value when q' is accepting.

    Returns:
        dict of {int: int}: Bound for every state of δ(S, σ).
    """

    bounds = {}
    for q in sorted(states):
        for target in a.post(q, letter):
            bounds[target] = min(bounds.get(target, f[q]), f[q])
    for target in bounds:
        if target in a.accepting:
            bounds[target] -= bounds[target] % 2

    return bounds


def max_ranking_successor(f, a, states, letter):
    """Return the pointwise maximal same-rank tight successor of f.

    Args:
        f (LevelRanking): An S-tight ranking.
        a (Nba): The automaton.
        states (iterable of int): The set S.
        letter (int): The letter σ.

    Returns:
        LevelRanking: The bound h when it is δ(S,σ)-tight with the rank of f,
            otherwise None.
    """

    bounds = successor_bounds(f, a, states, letter)
    if not bounds:
        return None

    h = LevelRanking(bounds)
    if h.rank == f.rank and is_tight(h):
        return h

    return None


# ==============================================================================
# Enumeration
# ==============================================================================
def bounded_successors(a, bounds, rank=None):
    """Enumerate level rankings below per-state bounds.

    States are assigned in ascending order with values in ascending order,
    so the sequence is deterministic. With 'rank' set only tight rankings of
    exactly that (odd) rank are produced; branches that can no longer cover
    the missing odd values are pruned.

    Args:
        a (Nba): The automaton (for the accepting states).
        bounds (dict of {int: int}): Upper bound per tracked state.
        rank (int): Required odd rank, or None for no tightness filter.

    Returns:
        generator of LevelRanking: The rankings.
    """

    states = sorted(bounds)
    if rank is None:
        caps = [bounds[q] for q in states]
        targets = frozenset()
    else:
        caps = [min(bounds[q], rank) for q in states]
        targets = frozenset(range(1, rank + 1, 2))
    values = [0] * len(states)

    def _assign(pos, covered):
        if len(targets) - len(covered) > len(states) - pos:
            return
        if pos == len(states):
            yield LevelRanking(tuple(zip(states, values)))
            return
        accepting = states[pos] in a.accepting
        for value in range(caps[pos] + 1):
            if accepting and value % 2:
                continue
            values[pos] = value
            if value in targets and value not in covered:
                for f in _assign(pos + 1, covered | {value}):
                    yield f
            else:
                for f in _assign(pos + 1, covered):
                    yield f

    return _assign(0, frozenset())


def tight_successors(a, bounds, rank):
    """Enumerate tight rankings of exactly 'rank' below per-state bounds."""

    if not bounds:
        return iter(())

    return bounded_successors(a, bounds, rank)


def enumerate_tight(a, states):
    """Enumerate every S-tight level ranking of an automaton.

    Rankings are produced by ascending rank, then lexicographically.

    Args:
        a (Nba): The automaton.
        states (iterable of int): The support S.

    Returns:
        list of LevelRanking: Empty when S is empty or S ⊆ F.
    """

    states = sorted(states)
    if not states:
        return []

    bounds = {q: 2 * a.n for q in states}
    result = []
    for rank in range(1, 2 * a.n, 2):
        result.extend(tight_successors(a, bounds, rank))

    return result


def enumerate_maximal(a, states):
    """Enumerate the S-tight rankings that are maximal with respect to S.

    For an odd rank r, distinct non-accepting states receive the odd values
    1, 3, ..., r-2, accepting states receive r-1 and the remaining
    non-accepting states receive r.

    Args:
        a (Nba): The automaton.
        states (iterable of int): The support S.

    Returns:
        list of LevelRanking: By ascending rank, then permutation order.
    """

    free = sorted(q for q in states if q not in a.accepting)
    final = sorted(q for q in states if q in a.accepting)
    result = []
    for picked in range(len(free)):
        rank = 2 * picked + 1
        for chosen in itertools.permutations(free, picked):
            mapping = {q: rank for q in free}
            mapping.update((q, 2 * pos + 1) for pos, q in enumerate(chosen))
            mapping.update((q, rank - 1) for q in final)
            result.append(LevelRanking(mapping))

    return result


# ==============================================================================
# Counting
# ==============================================================================
def count_tight(n):
    """Count the tight level rankings of an n-state automaton without
    accepting states.

    For rank 2k-1 the values range over k odd and k even numbers and must be
    onto the k odd ones; inclusion-exclusion over the missed odd values
    counts these maps.

    Args:
        n (int): Number of states, at least 1.

    Returns:
        int: tight(n).
    """

    if n < 1:
        raise ValueError("count_tight needs n >= 1")

    return sum((-1) ** missed * math.comb(k, missed) * (2 * k - missed) ** n
               for k in range(1, n + 1)
               for missed in range(k + 1))


def count_maximal(m):
    """Return Σ_{i=1}^{m} m!/i!, the number of maximal rankings for m
    non-accepting states."""

    if m < 0:
        raise ValueError("count_maximal needs m >= 0")

    return sum(math.factorial(m) // math.factorial(i) for i in range(1, m + 1))


def brute_force_tight_count(n):
    """Count tight rankings by filtering the maps [n] → {0..2n-1}.

    A map is tight when its largest value r is odd and every odd value up to
    r is attained. Maps are visited per candidate r with values in 0..r; the
    first n-1 values are enumerated and the choices for the last one are
    counted.

    Raises:
        ValueError: n is less than one.
    """

    if n < 1:
        raise ValueError("n must be at least 1, got {}".format(n))

    count = 0
    for rank in range(1, 2 * n, 2):
        odds = frozenset(range(1, rank + 1, 2))
        for prefix in itertools.product(range(rank + 1), repeat=n - 1):
            missing = len(odds.difference(prefix))
            if missing == 0:
                count += rank + 1
            elif missing == 1:
                count += 1

    return count


def kappa_ratios(limit):
    """Return (n, tight(n), tight(n)^(1/n)/n) for n = 1..limit."""

    rows = []
    for n in range(1, limit + 1):
        count = count_tight(n)
        rows.append((n, count, count ** (1.0 / n) / n))

    return rows


def subset_factorial_ratio(n):
    """Return 2^n·n!/tight(n), the entry-point blow-up relative to tight(n).
    """
    return float(2 ** n * math.factorial(n)) / count_tight(n)
