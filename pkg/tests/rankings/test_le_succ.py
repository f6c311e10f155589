# -*- coding: utf-8 -*-
"""Test cases for the 'le_succ', 'successor_bounds' and
'max_ranking_successor' functions."""
# ==============================================================================
# Imports
# ==============================================================================
import pytest
from buchi_tight.rankings import (LevelRanking, RankingError, le_succ,
                                  max_ranking_successor, successor_bounds)


# ==============================================================================
# Tests
# ==============================================================================
def test_le_succ(a1):
    """Verify successors may not exceed the value of any predecessor.

    Args:
        a1 (Nba): The running example.
    """

    f1 = LevelRanking({0: 1})

    assert le_succ(LevelRanking({0: 1, 1: 0}), f1, a1, {0}, 0)
    assert not le_succ(LevelRanking({0: 1, 1: 2}), f1, a1, {0}, 0)


def test_le_succ_domain_mismatch(a1):
    """Verify the candidate must be defined exactly on δ(S, σ).

    Args:
        a1 (Nba): The running example.
    """

    with pytest.raises(RankingError, match='domain mismatch'):
        le_succ(LevelRanking({0: 1}), LevelRanking({0: 1}), a1, {0}, 0)


def test_successor_bounds(a1):
    """Verify the bound of an accepting successor is evened downwards.

    Args:
        a1 (Nba): The running example.
    """

    bounds = successor_bounds(LevelRanking({0: 3}), a1, {0}, 0)

    assert bounds == {0: 3, 1: 2}


def test_successor_bounds_minimum(a1):
    """Verify a state with two predecessors gets the smaller value.

    Args:
        a1 (Nba): The running example.
    """

    bounds = successor_bounds(LevelRanking({0: 3, 1: 2}), a1, {0, 1}, 1)

    assert bounds == {1: 2}


def test_max_ranking_successor(a1):
    """Verify the bound is returned when it is tight with the same rank.

    Args:
        a1 (Nba): The running example.
    """

    h = max_ranking_successor(LevelRanking({0: 1}), a1, {0}, 0)

    assert h == LevelRanking({0: 1, 1: 0})


def test_max_ranking_successor_rank_drop(a1):
    """Verify no successor exists when the bound loses the rank.

    Args:
        a1 (Nba): The running example.
    """

    f = LevelRanking({0: 1, 1: 0})

    assert max_ranking_successor(f, a1, {0, 1}, 1) is None


def test_max_ranking_successor_not_tight(a1):
    """Verify no successor exists when the bound misses an odd value.

    Args:
        a1 (Nba): The running example.
    """

    f = LevelRanking({0: 3, 1: 2})

    assert max_ranking_successor(f, a1, {0, 1}, 0) is None


def test_max_ranking_successor_no_runs(a1):
    """Verify no successor exists when the runs die.

    Args:
        a1 (Nba): The running example.
    """

    assert max_ranking_successor(LevelRanking({0: 1}), a1, {0}, 1) is None
