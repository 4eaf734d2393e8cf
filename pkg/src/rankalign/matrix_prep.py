"""Square padding and directional augmentation of the fused similarity matrix."""

from __future__ import annotations

import numpy as np

from .types import (
    MAX_OBJECTIVE,
    OBJECTIVES,
    PAD_MAGNITUDE,
    AdjacencyMatrix,
    SimilarityMatrix,
)


def sentinel_for(objective: str) -> float:
    """Padding value: +BIG when minimizing, -BIG when maximizing."""
    if objective not in OBJECTIVES:
        raise ValueError(f"objective must be one of {OBJECTIVES}")
    return -PAD_MAGNITUDE if objective == MAX_OBJECTIVE else PAD_MAGNITUDE


def pad_to_square(sim: SimilarityMatrix, objective: str) -> AdjacencyMatrix:
    """Pad the shorter dimension with sentinels so the matrix becomes n x n."""
    sentinel = sentinel_for(objective)
    m1, m2 = sim.rows, sim.cols
    n = max(m1, m2)
    if m1 == m2:
        data = sim.data
    else:
        data = np.full((n, n), sentinel, dtype=sim.data.dtype)
        data[:m1, :m2] = sim.data
    return AdjacencyMatrix(
        data=data, real_rows=m1, real_cols=m2, objective=objective, sentinel=sentinel
    )


def add_directional(s_bar: AdjacencyMatrix) -> AdjacencyMatrix:
    """Fold in the reverse direction: A = S + S^T, padding kept at sentinel.

    Any cell whose forward or transposed source lies in the padded region is
    re-clamped to the sentinel, so padding keeps magnitude BIG (not 2*BIG)
    and the output stays exactly symmetric. For a square real block this
    clamps nothing.
    """
    data = s_bar.data + s_bar.data.T
    m = min(s_bar.real_rows, s_bar.real_cols)
    if m < s_bar.n:
        data[m:, :] = s_bar.sentinel
        data[:, m:] = s_bar.sentinel
    return AdjacencyMatrix(
        data=data,
        real_rows=s_bar.real_rows,
        real_cols=s_bar.real_cols,
        objective=s_bar.objective,
        sentinel=s_bar.sentinel,
    )
