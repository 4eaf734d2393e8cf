"""Per-view similarity matrices and their weighted fusion.

Similarity is the plain dot product between L2-normalized embedding rows;
fusion is an elementwise weighted sum over whichever views are present.
Storage stays float32 while dot products accumulate in float64 (768-wide
products lose precision under pure float32 accumulation).
"""

from __future__ import annotations

from typing import Mapping

import numpy as np

from .types import EmbeddingView, FusionWeights, SimilarityMatrix


def normalize_rows(view: EmbeddingView) -> EmbeddingView:
    """L2-normalize each row; all-zero rows stay zero (missing-view convention)."""
    m = view.matrix.astype(np.float64, copy=True)
    norms = np.linalg.norm(m, axis=1, keepdims=True)
    nonzero = norms[:, 0] > 0
    m[nonzero] /= norms[nonzero]
    return EmbeddingView(view=view.view, matrix=m.astype(np.float32))


def similarity(view1: EmbeddingView, view2: EmbeddingView) -> SimilarityMatrix:
    """Pairwise dot products: result[i, j] = row_i(side 1) . row_j(side 2)."""
    if view1.dimension != view2.dimension:
        raise ValueError(
            f"view dimension mismatch: {view1.dimension} vs {view2.dimension}"
        )
    a = view1.matrix.astype(np.float64, copy=False)
    b = view2.matrix.astype(np.float64, copy=False)
    scores = a @ b.T
    return SimilarityMatrix(data=scores.astype(np.float32), view_tag=view1.view)


def fuse(
    similarities: Mapping[str, SimilarityMatrix],
    weights: FusionWeights,
) -> SimilarityMatrix:
    """Elementwise weighted sum over the present views; absent views contribute nothing."""
    if not similarities:
        raise ValueError("cannot fuse an empty set of similarity matrices")
    alpha = weights.as_dict()
    shape = None
    fused = None
    for name, sim in similarities.items():
        if name not in alpha:
            raise ValueError(f"unknown view {name!r} in fusion input")
        if shape is None:
            shape = sim.data.shape
            fused = np.zeros(shape, dtype=np.float64)
        elif sim.data.shape != shape:
            raise ValueError(
                f"similarity shape mismatch: {name} is {sim.data.shape}, expected {shape}"
            )
        fused += alpha[name] * sim.data.astype(np.float64, copy=False)
    return SimilarityMatrix(data=fused.astype(np.float32))
