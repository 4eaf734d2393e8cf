"""Ranked entity alignment: multi-view similarity fusion, global bipartite
assignment, and exchange-loss candidate ranking."""

from .matrix_prep import add_directional, pad_to_square
from .metrics import MetricReport, compare_runs, hits_at_n, mrr
from .pipeline import AlignConfig, align_similarity, run_align
from .ranking import exchange_matrix, rank_rows, rearrange
from .similarity import fuse, normalize_rows, similarity
from .solver import (
    HAVE_COMPILED_KERNEL,
    SinkhornConfig,
    solve_bruteforce,
    solve_lapjv,
    solve_sinkhorn,
)
from .synth import make_synthetic
from .types import (
    AdjacencyMatrix,
    Assignment,
    EmbeddingView,
    EntityCatalog,
    FusionWeights,
    RankedAlignment,
    SimilarityMatrix,
    validate_dataset,
)

__version__ = "0.1.0"
