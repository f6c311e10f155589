# -*- coding: utf-8 -*-
"""Test cases for the 'run_suite' function."""
# ==============================================================================
# Imports
# ==============================================================================
import pytest
from buchi_tight.bench import BenchConfig, emit_report, run_suite
from buchi_tight.complement import ConstructionTimeout


# ==============================================================================
# Fixtures
# ==============================================================================
@pytest.fixture
def small_cfg():
    """A sweep over one and two states with a single instance per cell.

    Returns:
        BenchConfig: The sweep.
    """

    return BenchConfig(n=(1, 2), k=(1, 2), d=(1.5,), fa=(0.5,), instances=1,
                       seed=1)


# ==============================================================================
# Tests
# ==============================================================================
def test_rows(mocker, small_cfg):
    """Verify one row per instance and method, sorted by parameters, with the
    bound columns filled in.

    Args:
        mocker (MockFixture): A wrapper to the Mock library.
        small_cfg (BenchConfig): The sweep.
    """

    # Mock
    mocker.patch('buchi_tight.bench.perf_counter', return_value=0.0)

    # Test
    rows = run_suite(small_cfg)

    assert len(rows) == 2 * 2 * 3
    assert [(r.n, r.k, r.method) for r in rows[:3]] == [
        (1, 1, 'kv'), (1, 1, 'tight'), (1, 1, 'reduced')]
    assert all(r.ms == 0 and r.timeout == 0 for r in rows)
    assert all(r.states == r.q1 + r.q2 for r in rows)
    assert rows[-1].tight_n == 5
    assert rows[-1].tight_n1 == 31
    assert rows[-1].kv_bound == 25


def test_reduced_edge_bound(small_cfg):
    """Verify reduced rows respect the outdegree bound on ranked states.

    Args:
        small_cfg (BenchConfig): The sweep.
    """

    for row in run_suite(small_cfg):
        if row.method == 'reduced':
            assert row.max_outdegree <= 2
            assert row.edges <= 2 * row.q2 * row.k + row.q1 * row.k * \
                (1 + row.q2)


def test_deterministic_csv(mocker, small_cfg):
    """Verify the same sweep produces byte-identical CSV.

    Args:
        mocker (MockFixture): A wrapper to the Mock library.
        small_cfg (BenchConfig): The sweep.
    """

    # Mock
    mocker.patch('buchi_tight.bench.perf_counter', return_value=0.0)

    # Test
    first = emit_report(run_suite(small_cfg))[0]
    second = emit_report(run_suite(small_cfg))[0]

    assert first == second


def test_kv_cap():
    """Verify kv is skipped above kv_max_n."""

    cfg = BenchConfig(n=(2,), k=(1,), d=(1.0,), fa=(0.5,), instances=1,
                      kv_max_n=1)

    assert [row.method for row in run_suite(cfg)] == ['tight', 'reduced']


def test_max_n_warning():
    """Verify sizes above max_n are dropped with a warning."""

    cfg = BenchConfig(n=(1, 9), k=(1,), d=(1.0,), fa=(0.5,), instances=1,
                      methods=('tight',))

    with pytest.warns(UserWarning, match='max_n=7'):
        rows = run_suite(cfg)

    assert [row.n for row in rows] == [1]


def test_timeout_row(mocker, small_cfg):
    """Verify a timed out construction becomes a marked row and a warning.

    Args:
        mocker (MockFixture): A wrapper to the Mock library.
        small_cfg (BenchConfig): The sweep.
    """

    # Mock
    mocker.patch('buchi_tight.bench.complement',
                 side_effect=ConstructionTimeout('too slow'))

    # Test
    with pytest.warns(UserWarning, match='too slow'):
        rows = run_suite(small_cfg)

    assert rows
    assert all(row.timeout == 1 and row.states == 0 for row in rows)


def test_unsound_complement(mocker, small_cfg):
    """Verify an unsound complement aborts the sweep.

    Args:
        mocker (MockFixture): A wrapper to the Mock library.
        small_cfg (BenchConfig): The sweep.
    """

    # Mock
    mocker.patch('buchi_tight.bench.check_soundness', return_value=False)

    # Test
    with pytest.raises(RuntimeError, match='unsound'):
        run_suite(small_cfg)
