import os

import numpy as np
import pytest

from rankalign.solver import (
    HAVE_COMPILED_KERNEL,
    SinkhornConfig,
    active_kernel_name,
    solve_bruteforce,
    solve_lapjv,
    solve_sinkhorn,
)
from rankalign.types import AdjacencyMatrix


def _adj(data, objective="min"):
    return AdjacencyMatrix.from_dense(np.asarray(data, dtype=np.float64), objective)


def test_lapjv_two_by_two_min():
    a = solve_lapjv(_adj([[1.0, 2.0], [3.0, 0.0]], "min"))
    assert list(a.row_to_col) == [0, 1]
    assert a.objective_value == pytest.approx(1.0)


def test_lapjv_identity_score_max():
    n = 6
    a = solve_lapjv(_adj(np.eye(n), "max"))
    assert list(a.row_to_col) == list(range(n))
    assert a.objective_value == pytest.approx(n)


def test_lapjv_rejects_nan():
    m = np.eye(3)
    m[1, 1] = np.nan
    with pytest.raises(ValueError, match="finite"):
        solve_lapjv(_adj(m))


def test_bruteforce_single_cell():
    a = solve_bruteforce(_adj([[5.0]], "min"))
    assert list(a.row_to_col) == [0]
    assert a.objective_value == pytest.approx(5.0)


def test_bruteforce_total_tie_returns_lex_smallest():
    a = solve_bruteforce(_adj([[0.5, 0.5], [0.5, 0.5]], "max"))
    assert a.objective_value == pytest.approx(1.0)
    assert list(a.row_to_col) == [0, 1]


def test_bruteforce_three_by_three_max():
    m = [[0.9, 0.1, 0.0], [0.2, 0.8, 0.1], [0.0, 0.3, 0.7]]
    a = solve_bruteforce(_adj(m, "max"))
    assert list(a.row_to_col) == [0, 1, 2]
    assert a.objective_value == pytest.approx(2.4)


def test_bruteforce_refuses_large_n():
    with pytest.raises(ValueError, match="brute force"):
        solve_bruteforce(_adj(np.zeros((11, 11))))


@pytest.mark.parametrize("objective", ["min", "max"])
def test_lapjv_matches_bruteforce_random(objective):
    rng = np.random.default_rng(99)
    for _ in range(200):
        n = int(rng.integers(2, 9))
        adj = _adj(rng.random((n, n)), objective)
        exact = solve_bruteforce(adj)
        fast = solve_lapjv(adj)
        assert fast.objective_value == pytest.approx(exact.objective_value, abs=1e-9)


def test_max_min_duality():
    rng = np.random.default_rng(5)
    for _ in range(100):
        n = int(rng.integers(2, 8))
        m = rng.random((n, n))
        a_max = solve_lapjv(_adj(m, "max"))
        a_min = solve_lapjv(_adj(-m, "min"))
        assert a_max.objective_value == pytest.approx(-a_min.objective_value, abs=1e-9)
        assert np.array_equal(a_max.row_to_col, a_min.row_to_col)


def test_scale_invariance_of_argmax():
    rng = np.random.default_rng(6)
    for _ in range(50):
        n = int(rng.integers(2, 7))
        m = rng.random((n, n))
        c = float(rng.uniform(0.1, 10))
        base = solve_bruteforce(_adj(m, "max"))
        scaled_perm = solve_lapjv(_adj(c * m, "max")).row_to_col
        value = m[np.arange(n), scaled_perm].sum()
        assert value == pytest.approx(base.objective_value, abs=1e-9)


def test_padding_never_beats_a_real_column():
    # small padded instances: the real row must take the real column whenever
    # doing so improves the objective, verified against brute force
    rng = np.random.default_rng(7)
    for _ in range(50):
        m = rng.random((2, 3))
        data = np.full((3, 3), -1e6)
        data[:2, :] = m
        adj = AdjacencyMatrix(data=data, real_rows=2, real_cols=3, objective="max", sentinel=-1e6)
        fast = solve_lapjv(adj)
        exact = solve_bruteforce(adj)
        assert fast.objective_value == pytest.approx(exact.objective_value, abs=1e-6)
        assert np.all(fast.row_to_col[:2] < 3)


def test_permutation_validity_all_solvers():
    rng = np.random.default_rng(8)
    for _ in range(20):
        n = int(rng.integers(2, 10))
        adj = _adj(rng.random((n, n)), "max")
        for result in (solve_lapjv(adj), solve_sinkhorn(adj), solve_bruteforce(adj)):
            assert sorted(result.row_to_col) == list(range(n))


def test_kernels_agree(monkeypatch):
    if not HAVE_COMPILED_KERNEL:
        pytest.skip("compiled kernel unavailable")
    rng = np.random.default_rng(9)
    for _ in range(50):
        n = int(rng.integers(2, 40))
        adj = _adj(rng.random((n, n)), "min")
        compiled = solve_lapjv(adj)
        monkeypatch.setenv("RANKALIGN_PURE_PYTHON", "1")
        assert active_kernel_name() == "python"
        fallback = solve_lapjv(adj)
        monkeypatch.delenv("RANKALIGN_PURE_PYTHON")
        assert compiled.objective_value == pytest.approx(fallback.objective_value, abs=1e-9)


def test_sinkhorn_identity_score():
    a = solve_sinkhorn(_adj(np.eye(5), "max"))
    assert list(a.row_to_col) == list(range(5))


def test_sinkhorn_decodes_valid_permutation_on_noise():
    rng = np.random.default_rng(10)
    for _ in range(20):
        adj = _adj(rng.random((7, 7)), "max")
        a = solve_sinkhorn(adj)
        assert sorted(a.row_to_col) == list(range(7))


def test_sinkhorn_handles_sentinel_padding():
    data = np.full((3, 3), -1e6)
    data[:2, :2] = [[0.9, 0.1], [0.1, 0.8]]
    adj = AdjacencyMatrix(data=data, real_rows=2, real_cols=2, objective="max", sentinel=-1e6)
    a = solve_sinkhorn(adj)
    assert list(a.row_to_col[:2]) == [0, 1]


def test_sinkhorn_overflow_is_reported():
    adj = _adj([[1e9, 0.0], [0.0, 1e9]], "max")
    with pytest.raises(OverflowError, match="temperature"):
        solve_sinkhorn(adj, SinkhornConfig(temperature=0.01))


def test_sinkhorn_config_validation():
    with pytest.raises(ValueError):
        SinkhornConfig(temperature=0)
    with pytest.raises(ValueError):
        SinkhornConfig(iterations=0)


def test_sinkhorn_matches_lapjv_on_well_separated():
    rng = np.random.default_rng(11)
    agree = 0
    for _ in range(50):
        off = rng.uniform(0, 0.5, (8, 8))
        diag = rng.uniform(0.7, 1.0, 8)
        m = off.copy()
        m[np.arange(8), np.arange(8)] = diag
        adj = _adj(m, "max")
        agree += np.array_equal(solve_sinkhorn(adj).row_to_col, solve_lapjv(adj).row_to_col)
    assert agree >= 47
