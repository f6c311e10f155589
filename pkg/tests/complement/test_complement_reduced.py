# -*- coding: utf-8 -*-
"""Test cases for the 'complement_reduced' construction."""
# ==============================================================================
# Imports
# ==============================================================================
from buchi_tight.nba import Nba, intersect, is_empty, letters_for, \
    membership
from buchi_tight.rankings import LevelRanking, is_maximal
from buchi_tight.complement import (RankedState, SubsetState,
                                    complement_reduced, complement_tight,
                                    construction_stats, lower_tracked,
                                    tight_admits)
from buchi_tight.verify import WordSuite, enumerate_words


# ==============================================================================
# Globals
# ==============================================================================
SHORT_SUITE = WordSuite(max_stem=1, max_period=3)


# ==============================================================================
# Tests
# ==============================================================================
def test_running_example_words(a1, small_word_suite):
    """Verify the complement flips the verdict on every small word.

    Args:
        a1 (Nba): The running example.
        small_word_suite (WordSuite): Short exhaustive words.
    """

    result = complement_reduced(a1)

    for w in enumerate_words(2, small_word_suite):
        assert membership(result.automaton, w) is not membership(a1, w)


def test_running_example_sizes(a1):
    """Verify the running example needs two ranked states.

    Args:
        a1 (Nba): The running example.
    """

    stats = construction_stats(complement_reduced(a1))

    assert (stats.q1, stats.q2) == (4, 2)


def test_outdegree_at_most_two(random_suite):
    """Verify no ranked state has more than two successors per letter.

    Args:
        random_suite (def): Factory for seeded random automata.
    """

    for a in random_suite(24, n_values=(2, 3, 4)):
        stats = construction_stats(complement_reduced(a))
        assert stats.per_letter_max_outdegree <= 2


def test_entries_are_maximal(random_suite):
    """Verify subset states only enter ranked states with maximal
    rankings.

    Args:
        random_suite (def): Factory for seeded random automata.
    """

    for a in random_suite(12, n_values=(3, 4)):
        result = complement_reduced(a)
        for src, _, dst in result.automaton.transitions():
            source, target = result.states[src], result.states[dst]
            if isinstance(source, SubsetState) and \
                    isinstance(target, RankedState):
                assert is_maximal(target.f, a, target.S)


def test_edges_admitted_by_tight(random_suite):
    """Verify every edge of the reduced construction is an edge of the tight
    construction, and its language is contained in the tight one.

    Args:
        random_suite (def): Factory for seeded random automata.
    """

    for a in random_suite(12, n_values=(2, 3)):
        result = complement_reduced(a)
        tight = complement_tight(a)
        for src, letter, dst in result.automaton.transitions():
            assert tight_admits(a, result.states[src], letter,
                                result.states[dst])
        for w in enumerate_words(len(a.alphabet), SHORT_SUITE):
            if membership(result.automaton, w):
                assert membership(tight.automaton, w)


def test_sound(random_suite):
    """Verify the complement never shares a word with its input.

    Args:
        random_suite (def): Factory for seeded random automata.
    """

    for a in random_suite(24, n_values=(2, 3, 4)):
        assert is_empty(intersect(a, complement_reduced(a).automaton))


def test_lower_tracked():
    """Verify tracked states drop by one and an accepting tracked state
    invalidates the result."""

    a = Nba.build(letters_for(1), 4, [0], [1], [])
    f = LevelRanking({0: 1, 1: 2, 2: 2, 3: 3})

    assert lower_tracked(a, f, frozenset([2])) == \
        LevelRanking({0: 1, 1: 2, 2: 1, 3: 3})
    assert lower_tracked(a, f, frozenset([1, 2])) is None


def test_lower_tracked_keep_parity():
    """Verify keep_parity lowers accepting states to the next even value."""

    a = Nba.build(letters_for(1), 4, [0], [1], [])
    f = LevelRanking({0: 1, 1: 2, 2: 2, 3: 3})

    lowered = lower_tracked(a, f, frozenset([1, 2]), keep_parity=True)

    assert lowered == LevelRanking({0: 1, 1: 0, 2: 1, 3: 3})


def test_keep_parity_variant(a1, random_suite, small_word_suite):
    """Verify both lowering rules complement the same inputs.

    Args:
        a1 (Nba): The running example.
        random_suite (def): Factory for seeded random automata.
        small_word_suite (WordSuite): Short exhaustive words.
    """

    for a in [a1] + random_suite(10, n_values=(2, 3)):
        plain = complement_reduced(a)
        parity = complement_reduced(a, keep_parity=True)
        for w in enumerate_words(len(a.alphabet), small_word_suite):
            expected = not membership(a, w)
            assert membership(plain.automaton, w) is expected
            assert membership(parity.automaton, w) is expected
