# -*- coding: utf-8 -*-
"""Test cases for the 'write_labels' function."""
# ==============================================================================
# Imports
# ==============================================================================
from buchi_tight.rankings import LevelRanking
from buchi_tight.complement import RankedState, SubsetState, \
    complement_tight, write_labels


# ==============================================================================
# Tests
# ==============================================================================
def test_running_example(a1):
    """Verify one sorted 'index label' line per state.

    Args:
        a1 (Nba): The running example.
    """

    result = complement_tight(a1)

    lines = write_labels(result).splitlines()

    assert len(lines) == result.automaton.n
    assert lines[0] == '0 S={0}'
    assert '{} S={{0,1}} O={{}} f=[1,0] i=0'.format(
        result.states.index(RankedState(frozenset([0, 1]), frozenset(),
                                        LevelRanking({0: 1, 1: 0}), 0))) \
        in lines


def test_state_labels():
    """Verify the display syntax of both phases."""

    assert SubsetState(frozenset()).label(2) == 'S={}'
    assert RankedState(frozenset([0, 1]), frozenset([1]),
                       LevelRanking({0: 1, 1: 0}), 0).label(2) == \
        'S={0,1} O={1} f=[1,0] i=0'
    assert RankedState(frozenset([1]), frozenset(),
                       LevelRanking({1: 2})).label(3) == 'S={1} O={} f=[-,2,-]'
