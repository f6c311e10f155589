# -*- coding: utf-8 -*-
"""Test cases for the 'parse_nba' function."""
# ==============================================================================
# Imports
# ==============================================================================
import pytest
from buchi_tight.nba import NbaFormatError, parse_nba


# ==============================================================================
# Globals
# ==============================================================================
SINGLE = """nba
alphabet: a
states: 1
initial: 0
accepting: 0
0 a 0
"""


# ==============================================================================
# Tests
# ==============================================================================
def test_single_state():
    """Verify the smallest document yields one state with one self-loop."""

    a = parse_nba(SINGLE)

    assert a.n == 1
    assert a.initial == frozenset([0])
    assert a.accepting == frozenset([0])
    assert list(a.transitions()) == [(0, 0, 0)]


def test_running_example(a1):
    """Verify the running example has three transitions and the expected
    successor sets.

    Args:
        a1 (Nba): The running example.
    """

    assert len(list(a1.transitions())) == 3
    assert a1.post(0, 0) == frozenset([0, 1])
    assert a1.post(1, 1) == frozenset([1])
    assert a1.post(1, 0) == frozenset()


def test_comments_and_blank_lines():
    """Verify comment lines and blank lines are ignored."""

    text = '# leading comment\n\n' + SINGLE.replace('states: 1',
                                                      'states: 1\n# inner')

    assert parse_nba(text) == parse_nba(SINGLE)


def test_empty_initial_set():
    """Verify an 'initial:' line without states is rejected with its line
    number."""

    with pytest.raises(NbaFormatError, match='empty initial set') as info:
        parse_nba(SINGLE.replace('initial: 0', 'initial:'))

    assert info.value.lineno == 4


def test_unknown_letter():
    """Verify a transition over a letter outside the alphabet is rejected."""

    with pytest.raises(NbaFormatError, match="unknown letter 'c'"):
        parse_nba(SINGLE + '0 c 0\n')


def test_state_out_of_range():
    """Verify a transition target beyond the declared states is rejected."""

    with pytest.raises(NbaFormatError,
                       match='line 7: state index out of range: 5'):
        parse_nba(SINGLE + '0 a 5\n')


def test_missing_header():
    """Verify a document without the 'nba' header line is rejected."""

    with pytest.raises(NbaFormatError, match="expected 'nba' header"):
        parse_nba(SINGLE.replace('nba\n', '', 1))


def test_malformed_transition():
    """Verify a transition line with the wrong number of fields is rejected.
    """

    with pytest.raises(NbaFormatError, match='line 7'):
        parse_nba(SINGLE + '0 a\n')


@pytest.mark.parametrize('count', ['²', '٣²', '0', '-1', 'x',
                                   '1 2', ''])
def test_invalid_state_count(count):
    """Verify a state count that is not a positive decimal is rejected with
    its line number.

    Args:
        count (str): The text after 'states:'.
    """

    text = SINGLE.replace('states: 1', 'states: {}'.format(count))

    with pytest.raises(NbaFormatError,
                       match='line 3: expected a positive state count'):
        parse_nba(text)


def test_superscript_state_in_transition():
    """Verify a superscript digit used as a state index is rejected."""

    with pytest.raises(NbaFormatError, match="line 7: invalid state"):
        parse_nba(SINGLE + '0 a ²\n')
