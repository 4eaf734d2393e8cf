"""Pure-Python (numpy) linear assignment kernel.

Shortest-augmenting-path core of the Jonker-Volgenant method, one Dijkstra
pass per row over reduced costs, with numpy-vectorized relaxation steps.
Used when the compiled extension is unavailable or explicitly disabled; the
compiled kernel adds the column-reduction / augmenting-row-reduction
preprocessing and is much faster on large instances.
"""

from __future__ import annotations

import numpy as np


def lapjv_minimize(cost: np.ndarray) -> np.ndarray:
    """Return the column permutation minimizing sum(cost[i, perm[i]])."""
    cost = np.asarray(cost, dtype=np.float64)
    n = cost.shape[0]
    if cost.ndim != 2 or cost.shape[1] != n:
        raise ValueError("cost matrix must be square")
    if n == 0:
        return np.empty(0, dtype=np.intp)

    v = np.zeros(n)                      # column duals
    col_of = np.full(n, -1, dtype=np.intp)   # row -> assigned column
    row_of = np.full(n, -1, dtype=np.intp)   # column -> assigned row

    for cur_row in range(n):
        d = cost[cur_row] - v            # tentative shortest distances
        pred = np.full(n, cur_row, dtype=np.intp)
        scanned = np.zeros(n, dtype=bool)
        sink = -1
        while True:
            masked = np.where(scanned, np.inf, d)
            j = int(np.argmin(masked))
            mu = d[j]
            scanned[j] = True
            i = row_of[j]
            if i < 0:
                sink = j
                break
            # relax all unscanned columns through row i
            offset = cost[i, j] - v[j] - mu
            nd = cost[i] - v - offset
            better = ~scanned & (nd < d)
            d[better] = nd[better]
            pred[better] = i
        # duals move only for columns whose shortest distance is settled
        v[scanned] += d[scanned] - mu
        # augment along the predecessor chain
        j = sink
        while True:
            i = pred[j]
            row_of[j] = i
            col_of[i], j = j, col_of[i]
            if i == cur_row:
                break
    return col_of
