# -*- coding: utf-8 -*-
"""Test cases for the 'fingerprint' and 'format_set' helper functions."""
# ==============================================================================
# Imports
# ==============================================================================
import buchi_tight.helpers


# ==============================================================================
# Tests
# ==============================================================================
def test_default_length():
    """Verify fingerprint returns sixteen lower-case hex digits."""

    result = buchi_tight.helpers.fingerprint('nba v1\n')

    assert len(result) == 16
    assert set(result) <= set('0123456789abcdef')


def test_stable():
    """Verify equal texts share a fingerprint and different texts do not."""

    first = buchi_tight.helpers.fingerprint('states: 2\n')

    assert first == buchi_tight.helpers.fingerprint('states: 2\n')
    assert first != buchi_tight.helpers.fingerprint('states: 3\n')


def test_custom_length():
    """Verify the digest is truncated to the requested length."""

    assert len(buchi_tight.helpers.fingerprint('x', length=8)) == 8


def test_format_set():
    """Verify sets render sorted without spaces."""

    assert buchi_tight.helpers.format_set({3, 0, 2}) == '{0,2,3}'
    assert buchi_tight.helpers.format_set([]) == '{}'
