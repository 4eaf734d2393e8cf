"""Exchange-loss ranking on top of a preliminary assignment.

The assignment puts each row's partner score s_i on the diagonal of the
rearranged matrix; the exchange loss for rows i and j is then
(s_ij + s_ji) - (s_i + s_j), the change in total score if the two rows swap
partners. Sorting each row by that loss turns the single optimal assignment
into a full ranked candidate list per source entity.
"""

from __future__ import annotations

from typing import Optional, Sequence

import numpy as np

from .types import (
    MAX_OBJECTIVE,
    AdjacencyMatrix,
    Assignment,
    RankedAlignment,
)


def rearrange(adj: AdjacencyMatrix, assignment: Assignment) -> AdjacencyMatrix:
    """Permute columns so every row's assigned partner sits on the diagonal."""
    if assignment.n != adj.n:
        raise ValueError(
            f"assignment size {assignment.n} does not match matrix size {adj.n}"
        )
    data = adj.data[:, assignment.row_to_col]
    return AdjacencyMatrix(
        data=data,
        real_rows=adj.real_rows,
        real_cols=adj.real_cols,
        objective=adj.objective,
        sentinel=adj.sentinel,
    )


def exchange_matrix(a_bar: AdjacencyMatrix) -> np.ndarray:
    """Pairwise swap losses: out[i, j] = (A[i,j] + A[j,i]) - (s_i + s_j).

    Symmetric with an exactly zero diagonal. Input must already have the
    assigned scores s_i on its diagonal (see rearrange)."""
    data = a_bar.data.astype(np.float64, copy=False)
    s = np.diag(data)
    centered = data - s[:, None]
    return centered + centered.T


def rank_rows(
    a_unsorted: np.ndarray,
    direction: str,
    real_cols: int,
    assignment: Assignment,
    real_rows: Optional[int] = None,
    source_ids: Optional[Sequence[str]] = None,
    candidate_ids: Optional[Sequence[str]] = None,
) -> RankedAlignment:
    """Sort each row's swap candidates and map them back to original columns.

    ``direction`` follows the assignment objective: losses sort descending
    for "max" (bigger swap gain first) and ascending for "min". Candidates
    pointing at padded columns are dropped; equal losses order by ascending
    original column index.
    """
    a_unsorted = np.asarray(a_unsorted)
    n = a_unsorted.shape[0]
    if a_unsorted.ndim != 2 or a_unsorted.shape[1] != n:
        raise ValueError("exchange matrix must be square")
    if assignment.n != n:
        raise ValueError("assignment size does not match exchange matrix")
    if direction not in ("max", "min"):
        raise ValueError("direction must be 'max' or 'min'")
    if real_rows is None:
        real_rows = n

    perm = assignment.row_to_col
    orig_cols = np.asarray(perm)           # rearranged column j holds original column perm[j]
    keep = orig_cols < real_cols
    kept_orig = orig_cols[keep]

    candidates = []
    losses = []
    for i in range(real_rows):
        row = a_unsorted[i, keep]
        key = -row if direction == "max" else row
        order = np.lexsort((kept_orig, key))
        candidates.append(kept_orig[order])
        losses.append(row[order])
    return RankedAlignment(
        candidates=tuple(candidates),
        losses=tuple(losses),
        source_ids=tuple(source_ids) if source_ids is not None else None,
        candidate_ids=tuple(candidate_ids) if candidate_ids is not None else None,
    )


def rank_rows_topk(
    adj: AdjacencyMatrix,
    assignment: Assignment,
    k: int,
    real_rows: Optional[int] = None,
    block_size: int = 512,
    source_ids: Optional[Sequence[str]] = None,
    candidate_ids: Optional[Sequence[str]] = None,
) -> RankedAlignment:
    """Top-k slice of rank_rows, computed blockwise from the adjacency matrix.

    Avoids materializing the full n x n exchange matrix, so it is the route
    for very large instances. Ordering matches rank_rows; a loss tie that
    straddles the cutoff may keep either member."""
    n = adj.n
    if assignment.n != n:
        raise ValueError("assignment size does not match matrix size")
    if real_rows is None:
        real_rows = adj.real_rows
    direction = "max" if adj.objective == MAX_OBJECTIVE else "min"
    perm = np.asarray(assignment.row_to_col)
    data = adj.data
    s = data[np.arange(n), perm].astype(np.float64)
    keep = perm < adj.real_cols
    kept_orig = perm[keep]
    k = min(k, len(kept_orig))

    candidates = []
    losses = []
    for start in range(0, real_rows, block_size):
        stop = min(start + block_size, real_rows)
        rows = np.arange(start, stop)
        block = data[rows][:, perm].astype(np.float64)
        block += data[:, perm[rows]].T
        block -= s[rows, None]
        block -= s[None, :]
        block = block[:, keep]
        key = -block if direction == "max" else block
        top = np.argpartition(key, k - 1, axis=1)[:, :k] if k < key.shape[1] else (
            np.broadcast_to(np.arange(key.shape[1]), key.shape).copy()
        )
        for r in range(len(rows)):
            idx = top[r]
            order = np.lexsort((kept_orig[idx], key[r, idx]))
            sel = idx[order]
            candidates.append(kept_orig[sel])
            losses.append(block[r, sel])
    return RankedAlignment(
        candidates=tuple(candidates),
        losses=tuple(losses),
        source_ids=tuple(source_ids) if source_ids is not None else None,
        candidate_ids=tuple(candidate_ids) if candidate_ids is not None else None,
    )


def true_ranks(
    adj: AdjacencyMatrix,
    assignment: Assignment,
    truth_cols: np.ndarray,
    block_size: int = 512,
) -> np.ndarray:
    """Rank of a known true column in each source row's candidate list.

    Equivalent to rank_rows followed by a lookup, but runs blockwise without
    materializing or sorting full rows, so it scales to very large matrices.
    ``truth_cols[i]`` is the original column expected for source row i (use a
    negative value to skip a row; its rank is reported as 0). Only rows
    0..len(truth_cols) are examined. Sort direction follows the assignment
    objective.
    """
    maximize = assignment.objective == MAX_OBJECTIVE
    n = adj.n
    perm = np.asarray(assignment.row_to_col)
    inv = np.empty(n, dtype=np.intp)
    inv[perm] = np.arange(n)
    data = adj.data
    s = data[np.arange(n), perm].astype(np.float64)   # diagonal of the rearranged matrix
    keep = perm < adj.real_cols
    kept_orig = perm[keep]

    m = len(truth_cols)
    ranks = np.zeros(m, dtype=np.int64)
    for start in range(0, m, block_size):
        stop = min(start + block_size, m)
        rows = np.arange(start, stop)
        tc = np.asarray(truth_cols[start:stop])
        valid = tc >= 0
        # loss[i, j] = (A[i, p(j)] + A[j, p(i)]) - (s_i + s_j)
        block = data[rows][:, perm].astype(np.float64)
        block += data[:, perm[rows]].T
        block -= s[rows, None]
        block -= s[None, :]
        block = block[:, keep]
        j_true = inv[np.clip(tc, 0, n - 1)]
        # position of the true column inside the kept set
        kept_pos = np.cumsum(keep) - 1
        true_loss = block[np.arange(len(rows)), kept_pos[j_true]]
        if maximize:
            better = (block > true_loss[:, None]).sum(axis=1)
        else:
            better = (block < true_loss[:, None]).sum(axis=1)
        ties_before = (
            (block == true_loss[:, None]) & (kept_orig[None, :] < tc[:, None])
        ).sum(axis=1)
        ranks[start:stop] = np.where(valid, better + ties_before + 1, 0)
    return ranks
