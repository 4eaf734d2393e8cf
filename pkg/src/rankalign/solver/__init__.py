"""Global bipartite assignment solvers.

Three routes over the same adjacency matrix: the exact Jonker-Volgenant
solver (compiled Cython kernel when available, numpy fallback otherwise),
an approximate Sinkhorn-scaling solver with greedy decode, and an
exhaustive brute-force oracle for testing.

Set RANKALIGN_PURE_PYTHON=1 to force the fallback kernel.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

import numpy as np

from ..types import MAX_OBJECTIVE, MIN_OBJECTIVE, AdjacencyMatrix, Assignment
from ._fallback import lapjv_minimize as _lapjv_python

try:
    from ._kernel import lapjv_minimize as _lapjv_compiled

    HAVE_COMPILED_KERNEL = True
except ImportError:  # pragma: no cover - depends on build environment
    _lapjv_compiled = None
    HAVE_COMPILED_KERNEL = False


def active_kernel_name() -> str:
    if HAVE_COMPILED_KERNEL and not os.environ.get("RANKALIGN_PURE_PYTHON"):
        return "compiled"
    return "python"


def _lapjv(cost: np.ndarray) -> np.ndarray:
    if active_kernel_name() == "compiled":
        return _lapjv_compiled(np.ascontiguousarray(cost))
    return _lapjv_python(cost)


def _objective_value(data: np.ndarray, perm: np.ndarray) -> float:
    return float(data[np.arange(len(perm)), perm].astype(np.float64).sum())


def solve_lapjv(adj: AdjacencyMatrix) -> Assignment:
    """Exact optimum of sum_i A[i, perm(i)] under the matrix's objective.

    Max objective is solved by negating the matrix and minimizing.
    """
    data = adj.data
    if not np.all(np.isfinite(data)):
        raise ValueError("adjacency matrix contains non-finite entries")
    cost = -data if adj.objective == MAX_OBJECTIVE else data
    perm = _lapjv(cost)
    return Assignment(
        row_to_col=perm,
        objective_value=_objective_value(data, perm),
        objective=adj.objective,
    )


_BRUTE_LIMIT = 10
_PERM_CHUNK = 200_000
_PERM_CACHE_LIMIT = 8  # 8! x 8 ints is small enough to keep around
_perm_tables: dict[int, np.ndarray] = {}


def _permutation_chunks(n: int):
    if n <= _PERM_CACHE_LIMIT:
        table = _perm_tables.get(n)
        if table is None:
            table = np.array(list(itertools.permutations(range(n))), dtype=np.intp)
            _perm_tables[n] = table
        yield table
        return
    perm_iter = itertools.permutations(range(n))
    while True:
        chunk = np.array(list(itertools.islice(perm_iter, _PERM_CHUNK)), dtype=np.intp)
        if chunk.size == 0:
            return
        yield chunk


def solve_bruteforce(adj: AdjacencyMatrix) -> Assignment:
    """Exhaustive search over all n! permutations; ties resolve to the
    lexicographically smallest permutation. Refuses n > 10."""
    n = adj.n
    if n > _BRUTE_LIMIT:
        raise ValueError(f"brute force refuses n={n} > {_BRUTE_LIMIT} (factorial blowup)")
    data = adj.data.astype(np.float64)
    maximize = adj.objective == MAX_OBJECTIVE
    best_val = -np.inf if maximize else np.inf
    best_perm = None
    rows = np.arange(n)
    for chunk in _permutation_chunks(n):
        values = data[rows, chunk].sum(axis=1)
        k = int(np.argmax(values) if maximize else np.argmin(values))
        # argmax/argmin take the first optimum, which is lexicographically
        # smallest within the chunk; strict comparison keeps earlier chunks.
        if (maximize and values[k] > best_val) or (not maximize and values[k] < best_val):
            best_val = float(values[k])
            best_perm = chunk[k].copy()
    return Assignment(row_to_col=best_perm, objective_value=best_val, objective=adj.objective)


@dataclass(frozen=True)
class SinkhornConfig:
    temperature: float = 0.05
    iterations: int = 100
    convergence_tol: float = 1e-6

    def __post_init__(self):
        if self.temperature <= 0:
            raise ValueError("temperature must be positive")
        if self.iterations < 1:
            raise ValueError("iterations must be >= 1")
        if self.convergence_tol <= 0:
            raise ValueError("convergence_tol must be positive")


def solve_sinkhorn(adj: AdjacencyMatrix, cfg: SinkhornConfig | None = None) -> Assignment:
    """Approximate assignment via Sinkhorn scaling plus greedy decode.

    Scales K = exp(sign * A / temperature) toward a doubly stochastic matrix,
    then repeatedly locks the globally largest remaining entry. The decode
    always yields a valid permutation; the objective is recomputed on A.
    """
    if cfg is None:
        cfg = SinkhornConfig()
    data = adj.data.astype(np.float64)
    if not np.all(np.isfinite(data)):
        raise ValueError("adjacency matrix contains non-finite entries")
    sign = 1.0 if adj.objective == MAX_OBJECTIVE else -1.0
    with np.errstate(over="ignore", under="ignore"):
        kernel = np.exp(sign * data / cfg.temperature)
    if not np.all(np.isfinite(kernel)):
        raise OverflowError(
            "exponential overflow in Sinkhorn kernel; increase the temperature"
        )
    # exp underflows to 0 for heavily penalized (e.g. padded) cells; a tiny
    # floor keeps the row/column normalizations finite without affecting
    # which entries win the decode.
    np.maximum(kernel, 1e-300, out=kernel)

    n = adj.n
    for _ in range(cfg.iterations):
        kernel /= kernel.sum(axis=1, keepdims=True)
        kernel /= kernel.sum(axis=0, keepdims=True)
        row_err = np.abs(kernel.sum(axis=1) - 1.0).max()
        col_err = np.abs(kernel.sum(axis=0) - 1.0).max()
        if max(row_err, col_err) < cfg.convergence_tol:
            break

    order = np.argsort(kernel, axis=None)[::-1]
    perm = np.full(n, -1, dtype=np.intp)
    row_free = np.ones(n, dtype=bool)
    col_free = np.ones(n, dtype=bool)
    locked = 0
    for flat in order:
        i, j = divmod(int(flat), n)
        if row_free[i] and col_free[j]:
            perm[i] = j
            row_free[i] = False
            col_free[j] = False
            locked += 1
            if locked == n:
                break
    return Assignment(
        row_to_col=perm,
        objective_value=_objective_value(adj.data, perm),
        objective=adj.objective,
    )
