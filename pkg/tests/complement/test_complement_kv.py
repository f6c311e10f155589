# -*- coding: utf-8 -*-
"""Test cases for the 'complement_kv' construction."""
# ==============================================================================
# Imports
# ==============================================================================
import pytest
from buchi_tight.nba import Nba, UPWord, intersect, is_empty, letters_for, \
    membership
from buchi_tight.rankings import LevelRanking
from buchi_tight.complement import RankedState, complement_kv, \
    dominant_successors, invariant_violations, kv_rank_cap
from buchi_tight.verify import enumerate_words


# ==============================================================================
# Tests
# ==============================================================================
def test_universal_input(universal_nba):
    """Verify the complement of a^ω over {a} is empty.

    Args:
        universal_nba (Nba): Accepts every word.
    """

    assert is_empty(complement_kv(universal_nba).automaton)


def test_empty_input():
    """Verify the complement of the empty language over {a} accepts a^ω."""

    a = Nba.build(letters_for(1), 1, [0], [], [(0, 0, 0)])

    result = complement_kv(a)

    assert membership(result.automaton, UPWord((), (0,)))


def test_running_example_words(a1, small_word_suite):
    """Verify the complement flips the verdict on every small word.

    Args:
        a1 (Nba): The running example.
        small_word_suite (WordSuite): Short exhaustive words.
    """

    result = complement_kv(a1)

    for w in enumerate_words(2, small_word_suite):
        assert membership(result.automaton, w) is not membership(a1, w)


def test_single_top_ranking(a1):
    """Verify the default construction starts from the top ranking only.

    Args:
        a1 (Nba): The running example.
    """

    result = complement_kv(a1)

    initial = [result.states[q] for q in sorted(result.automaton.initial)]
    assert kv_rank_cap(a1) == 2
    assert [s.f.as_dict() for s in initial] == [{0: 2}]
    assert initial[0].O == frozenset() and initial[0].i is None


def test_exhaustive_initial_rankings(a1):
    """Verify the exhaustive construction starts from every ranking of I with
    values up to 2n.

    Args:
        a1 (Nba): The running example.
    """

    result = complement_kv(a1, exhaustive=True)

    initial = [result.states[q] for q in sorted(result.automaton.initial)]
    assert sorted(s.f[0] for s in initial) == [0, 1, 2, 3, 4]
    assert all(s.O == frozenset() and s.i is None for s in initial)


def test_exhaustive_agrees(a1, random_suite, small_word_suite):
    """Verify pruning to dominant successors keeps the language and never
    adds states.

    Args:
        a1 (Nba): The running example.
        random_suite (def): Factory for seeded random automata.
        small_word_suite (WordSuite): Short exhaustive words.
    """

    for a in [a1] + random_suite(8, n_values=(1, 2)):
        pruned = complement_kv(a)
        full = complement_kv(a, exhaustive=True)
        assert pruned.automaton.n <= full.automaton.n
        for w in enumerate_words(len(a.alphabet), small_word_suite):
            assert membership(pruned.automaton, w) is \
                membership(full.automaton, w)


@pytest.mark.parametrize('bounds, base, expected', [
    ({0: 2, 1: 2}, {0, 1}, [{0: 1, 1: 2}, {0: 2, 1: 2}]),
    ({0: 3, 1: 2}, {0, 1}, [{0: 2, 1: 2}, {0: 3, 1: 2}]),
    ({0: 2, 1: 2}, {1}, [{0: 2, 1: 2}]),
    ({0: 0, 1: 0}, {0, 1}, [{0: 0, 1: 0}]),
])
def test_dominant_successors(a1, bounds, base, expected):
    """Verify one maximal ranking per parity choice on the non-accepting
    states of the base.

    Args:
        a1 (Nba): The running example.
    """

    result = dominant_successors(a1, bounds, frozenset(base))

    assert [f.as_dict() for f in result] == expected


def test_empty_support_sink(a1):
    """Verify words without runs end in the accepting empty-support state.

    Args:
        a1 (Nba): The running example.
    """

    result = complement_kv(a1)

    sink = RankedState(frozenset(), frozenset(), LevelRanking({}))
    pos = result.states.index(sink)
    assert pos in result.automaton.accepting
    assert result.automaton.post(pos, 0) == frozenset([pos])


def test_random_instances(random_suite):
    """Verify soundness and the state invariants on small random inputs.

    Args:
        random_suite (def): Factory for seeded random automata.
    """

    for a in random_suite(8, n_values=(1, 2)):
        result = complement_kv(a)
        assert invariant_violations(a, result) == []
        assert is_empty(intersect(a, result.automaton))
