"""Shared domain types for the alignment pipeline.

All types are frozen dataclasses wrapping read-only numpy arrays, so they can
be shared freely across threads. External entity ids are opaque strings; the
numerics only ever see dense 0-based indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping, Optional, Sequence

import numpy as np

VIEWS = ("E", "ST", "AT", "AR")

SIDE_1 = "G1"
SIDE_2 = "G2"


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a)
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class EntityCatalog:
    """Ordered list of entity ids for one graph side; index <-> id is a bijection."""

    side: str
    ids: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "ids", tuple(self.ids))
        if len(set(self.ids)) != len(self.ids):
            raise ValueError(f"duplicate entity ids in catalog for side {self.side}")
        if len(self.ids) == 0:
            raise ValueError("catalog must contain at least one entity")

    @property
    def count(self) -> int:
        return len(self.ids)

    def index_of(self, entity_id: str) -> int:
        try:
            return self._index[entity_id]
        except AttributeError:
            object.__setattr__(self, "_index", {e: i for i, e in enumerate(self.ids)})
            return self._index[entity_id]


@dataclass(frozen=True)
class EmbeddingView:
    """One view's (entity count x dimension) embedding matrix for one side."""

    view: str
    matrix: np.ndarray

    def __post_init__(self):
        if self.view not in VIEWS:
            raise ValueError(f"unknown view {self.view!r}, expected one of {VIEWS}")
        m = np.asarray(self.matrix)
        if m.ndim != 2:
            raise ValueError("embedding matrix must be 2-dimensional")
        object.__setattr__(self, "matrix", _freeze(m))

    @property
    def count(self) -> int:
        return self.matrix.shape[0]

    @property
    def dimension(self) -> int:
        return self.matrix.shape[1]


@dataclass(frozen=True)
class SimilarityMatrix:
    """Pairwise scores between side-1 rows and side-2 columns."""

    data: np.ndarray
    view_tag: Optional[str] = None

    def __post_init__(self):
        d = np.asarray(self.data)
        if d.ndim != 2:
            raise ValueError("similarity matrix must be 2-dimensional")
        object.__setattr__(self, "data", _freeze(d))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]


@dataclass(frozen=True)
class FusionWeights:
    alpha_E: float = 1.00
    alpha_ST: float = 0.75
    alpha_AT: float = 0.75
    alpha_AR: float = 0.15

    def __post_init__(self):
        vals = self.as_dict()
        if any(v < 0 for v in vals.values()):
            raise ValueError("fusion weights must be non-negative")
        if all(v == 0 for v in vals.values()):
            raise ValueError("at least one fusion weight must be positive")

    def as_dict(self) -> dict[str, float]:
        return {
            "E": self.alpha_E,
            "ST": self.alpha_ST,
            "AT": self.alpha_AT,
            "AR": self.alpha_AR,
        }


#: Finite stand-in for the infinity padding value. Large enough to dominate
#: any sum of fused similarities (bounded by the weight budget) by six orders
#: of magnitude, while staying safe in float32 arithmetic.
PAD_MAGNITUDE = 1.0e6

MIN_OBJECTIVE = "min"
MAX_OBJECTIVE = "max"
OBJECTIVES = (MIN_OBJECTIVE, MAX_OBJECTIVE)


@dataclass(frozen=True)
class AdjacencyMatrix:
    """Square matrix fed to the assignment solvers.

    ``real_rows`` x ``real_cols`` is the block holding genuine pairwise
    scores; everything outside it carries the ``sentinel`` padding value.
    """

    data: np.ndarray
    real_rows: int
    real_cols: int
    objective: str
    sentinel: float = 0.0

    def __post_init__(self):
        d = np.asarray(self.data)
        if d.ndim != 2 or d.shape[0] != d.shape[1]:
            raise ValueError("adjacency matrix must be square")
        if self.objective not in OBJECTIVES:
            raise ValueError(f"objective must be one of {OBJECTIVES}")
        if not (1 <= self.real_rows <= d.shape[0] and 1 <= self.real_cols <= d.shape[0]):
            raise ValueError("real block does not fit inside the matrix")
        object.__setattr__(self, "data", _freeze(d))

    @property
    def n(self) -> int:
        return self.data.shape[0]

    @classmethod
    def from_dense(cls, data: np.ndarray, objective: str = MAX_OBJECTIVE) -> "AdjacencyMatrix":
        """Wrap an already-square matrix with no padding."""
        d = np.asarray(data)
        return cls(data=d, real_rows=d.shape[0], real_cols=d.shape[1], objective=objective)


@dataclass(frozen=True)
class Assignment:
    """A bijection row -> column plus the objective it achieves."""

    row_to_col: np.ndarray
    objective_value: float
    objective: str

    def __post_init__(self):
        p = np.asarray(self.row_to_col, dtype=np.intp)
        n = p.shape[0]
        if p.ndim != 1 or not np.array_equal(np.sort(p), np.arange(n)):
            raise ValueError("row_to_col must be a permutation of 0..n-1")
        if self.objective not in OBJECTIVES:
            raise ValueError(f"objective must be one of {OBJECTIVES}")
        object.__setattr__(self, "row_to_col", _freeze(p))

    @property
    def n(self) -> int:
        return self.row_to_col.shape[0]

    def col_to_row(self) -> np.ndarray:
        inv = np.empty(self.n, dtype=np.intp)
        inv[self.row_to_col] = np.arange(self.n)
        return inv


@dataclass(frozen=True)
class RankedAlignment:
    """Per source row, every real column ordered by exchange loss.

    ``candidates[i]`` holds original side-2 column indices, best first;
    ``losses[i]`` the matching exchange losses (non-increasing in max mode).
    Optional id tuples map indices back to external entity ids.
    """

    candidates: tuple[np.ndarray, ...]
    losses: tuple[np.ndarray, ...]
    source_ids: Optional[tuple[str, ...]] = None
    candidate_ids: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if len(self.candidates) != len(self.losses):
            raise ValueError("candidates and losses must have one entry per source row")
        object.__setattr__(self, "candidates", tuple(_freeze(c) for c in self.candidates))
        object.__setattr__(self, "losses", tuple(_freeze(l) for l in self.losses))
        if self.source_ids is not None and len(self.source_ids) != len(self.candidates):
            raise ValueError("source_ids length mismatch")

    @property
    def n_sources(self) -> int:
        return len(self.candidates)

    def source_id(self, i: int) -> str:
        return self.source_ids[i] if self.source_ids is not None else str(i)

    def candidate_id(self, j: int) -> str:
        return self.candidate_ids[j] if self.candidate_ids is not None else str(j)

    def rank_of(self, source_index: int, target_index: int) -> Optional[int]:
        """1-based rank of a target column in a source row's list, or None."""
        hits = np.nonzero(self.candidates[source_index] == target_index)[0]
        return int(hits[0]) + 1 if hits.size else None

    def iter_rows(self) -> Iterator[tuple[int, np.ndarray, np.ndarray]]:
        for i, (cand, loss) in enumerate(zip(self.candidates, self.losses)):
            yield i, cand, loss


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_dataset(
    catalogs: Mapping[str, "EntityCatalog | Sequence[str]"],
    views: Mapping[str, Mapping[str, EmbeddingView]],
) -> ValidationReport:
    """Check that two sides' catalogs and per-view embeddings fit together.

    ``catalogs`` maps side -> catalog (or a raw id sequence, so malformed
    inputs can still be reported instead of refused), ``views`` maps
    side -> {view: embedding}. Returns a report; never raises for content
    problems.
    """
    problems: list[str] = []
    counts: dict[str, int] = {}
    for side in (SIDE_1, SIDE_2):
        if side not in catalogs:
            problems.append(f"missing catalog for side {side}")
            continue
        cat = catalogs[side]
        ids = cat.ids if isinstance(cat, EntityCatalog) else tuple(cat)
        counts[side] = len(ids)
        if len(set(ids)) != len(ids):
            problems.append(f"{side}: duplicate entity ids")
    for side, side_views in views.items():
        count = counts.get(side)
        for name, view in side_views.items():
            if count is not None and view.count != count:
                problems.append(
                    f"{side}/{name}: row count {view.count} != catalog count {count}"
                )
            if not np.all(np.isfinite(view.matrix)):
                problems.append(f"{side}/{name}: non-finite entry")
    v1 = views.get(SIDE_1, {})
    v2 = views.get(SIDE_2, {})
    for name in sorted(set(v1) & set(v2)):
        if v1[name].dimension != v2[name].dimension:
            problems.append(
                f"view dimension mismatch for {name}: "
                f"{v1[name].dimension} vs {v2[name].dimension}"
            )
    for name in sorted(set(v1) ^ set(v2)):
        problems.append(f"view {name} present on one side only")
    return ValidationReport(tuple(problems))
