# -*- coding: utf-8 -*-
"""Test cases for the 'quotient_to_dot' function."""
# ==============================================================================
# Imports
# ==============================================================================
from buchi_tight.nba import parse_word
from buchi_tight.rundag import build_quotient, compute_ranks, quotient_to_dot


# ==============================================================================
# Tests
# ==============================================================================
def test_ranked_rendering(a1):
    """Verify levels become rank=same rows and back edges are dashed.

    Args:
        a1 (Nba): The running example.
    """

    g = build_quotient(a1, parse_word('(a)', a1.alphabet))

    dot = quotient_to_dot(g, compute_ranks(g, a1.n))

    assert dot.startswith('digraph rundag {\n')
    assert '  v1_1 [label="1,1\\n0", shape=doublecircle];' in dot
    assert '  { rank=same; v0_1; v1_1 }' in dot
    assert '  v0_0 -> v0_1;' in dot
    assert '  v0_1 -> v0_1 [style=dashed];' in dot
    assert dot.endswith('}\n')


def test_unranked_rendering(a1):
    """Verify labels carry only the vertex without ranks.

    Args:
        a1 (Nba): The running example.
    """

    g = build_quotient(a1, parse_word('(a)', a1.alphabet))

    assert '  v0_0 [label="0,0", shape=circle];' in quotient_to_dot(g)
