# -*- coding: utf-8 -*-
"""pytest plugin with automata fixtures for tests built on 'buchi_tight'."""
# ==============================================================================
# Imports
# ==============================================================================
import os
import pytest
from warnings import warn

from buchi_tight.nba import (empty_nba as build_empty_nba, letters_for,
                             parse_nba, random_nba, serialize_nba,
                             universal_nba as build_universal_nba)
from buchi_tight.verify import EXHAUSTIVE, WordSuite


# ==============================================================================
# Globals
# ==============================================================================
# Accepts exactly the words a^k b^ω with k >= 1.
A1_TEXT = """nba
alphabet: a b
states: 2
initial: 0
accepting: 1
0 a 0
0 a 1
1 b 1
"""


# ==============================================================================
# Fixtures
# ==============================================================================
@pytest.fixture
def a1():
    """The two-state running example over {a, b}.

    Returns:
        Nba: State 0 loops on a and guesses the last a by moving to the
            accepting state 1, which loops on b.
    """

    return parse_nba(A1_TEXT)


@pytest.fixture
def universal_nba():
    """Provide a one-state automaton accepting every word over {a}."""

    return build_universal_nba(letters_for(1))


@pytest.fixture
def empty_nba():
    """Provide a one-state automaton with an empty language over {a, b}."""

    return build_empty_nba(letters_for(2))


@pytest.fixture
def small_word_suite():
    """Provide the exhaustive suite of words with |stem| <= 2 and
    |period| <= 3."""

    return WordSuite(max_stem=2, max_period=3, mode=EXHAUSTIVE)


@pytest.fixture
def random_suite():
    """Generate seeded random automata.

    Returns:
        def: A factory function object returning a list of Nba.
    """

    def _factory(count, n_values=(1, 2, 3), k_values=(1, 2),
                 d_values=(1.0, 1.5), fa_values=(0.25, 0.5), seed=0):
        """Draw 'count' automata cycling through the parameter grid.

        Args:
            count (int): Number of automata.
            n_values (tuple of int): State counts.
            k_values (tuple of int): Alphabet sizes.
            d_values (tuple of float): Densities.
            fa_values (tuple of float): Accepting fractions.
            seed (int): Seed of the first instance; instance j uses seed + j.

        Returns:
            list of Nba: The automata.
        """

        cells = [(n, k, d, fa) for n in n_values for k in k_values
                 for d in d_values for fa in fa_values]

        return [random_nba(*cells[j % len(cells)], seed=seed + j)
                for j in range(count)]

    return _factory


@pytest.fixture
def nba_file(tmp_path):
    """Write automata into NBA v1 files that are removed after each test.

    Returns:
        def: A factory function object returning the file path as a str.

    Raises:
        UserWarning: A file was already gone at teardown.
    """

    paths = []  # Track files for teardown.

    def _factory(a, name=None):
        """Serialize an automaton (or raw text) into a temporary file.

        Args:
            a (Nba or str): The automaton, or the document text verbatim.
            name (str): File name; 'automaton<k>.nba' by default.

        Returns:
            str: The path of the written file.
        """

        text = a if isinstance(a, str) else serialize_nba(a)
        path = str(tmp_path / (name or 'automaton{}.nba'.format(len(paths))))
        with open(path, 'w', encoding='utf-8') as handle:
            handle.write(text)
        paths.append(path)

        return path

    yield _factory

    # Teardown
    for path in paths:
        try:
            os.remove(path)
        except OSError:
            warn(UserWarning("Attempted to remove missing automaton file: "
                             "{}".format(path)))
