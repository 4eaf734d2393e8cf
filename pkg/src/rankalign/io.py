"""File formats: binary matrices, catalogs, truth pairs, ranked output, reports.

Binary matrix format ("KGAV1"): 5 magic bytes, little-endian u32 row count,
u32 column count (the embedding dimension for view files), then row-major
32-bit IEEE floats. One file per (side, view); the same container also
carries externally supplied similarity matrices.
"""

from __future__ import annotations

import struct
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from .types import EmbeddingView, EntityCatalog, RankedAlignment, SimilarityMatrix

MAGIC = b"KGAV1"
_HEADER = struct.Struct("<II")


def write_matrix(path: str | Path, matrix: np.ndarray) -> None:
    m = np.ascontiguousarray(matrix, dtype=np.float32)
    if m.ndim != 2:
        raise ValueError("only 2-d matrices can be written")
    with open(path, "wb") as fh:
        fh.write(MAGIC)
        fh.write(_HEADER.pack(m.shape[0], m.shape[1]))
        fh.write(m.tobytes())


def read_matrix(path: str | Path) -> np.ndarray:
    with open(path, "rb") as fh:
        magic = fh.read(len(MAGIC))
        if magic != MAGIC:
            raise ValueError(f"{path}: bad magic {magic!r}, not a KGAV1 file")
        rows, cols = _HEADER.unpack(fh.read(_HEADER.size))
        data = fh.read(rows * cols * 4)
    if len(data) != rows * cols * 4:
        raise ValueError(f"{path}: truncated payload")
    return np.frombuffer(data, dtype="<f4").reshape(rows, cols).copy()


def write_view(path: str | Path, view: EmbeddingView) -> None:
    write_matrix(path, view.matrix)


def read_view(path: str | Path, view_name: str) -> EmbeddingView:
    return EmbeddingView(view=view_name, matrix=read_matrix(path))


def read_similarity(path: str | Path) -> SimilarityMatrix:
    return SimilarityMatrix(data=read_matrix(path))


def write_catalog(path: str | Path, catalog: EntityCatalog) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for entity_id in catalog.ids:
            fh.write(entity_id + "\n")


def read_catalog(path: str | Path, side: str) -> EntityCatalog:
    with open(path, encoding="utf-8") as fh:
        ids = [line.rstrip("\n") for line in fh]
    return EntityCatalog(side=side, ids=tuple(ids))


def write_truth(path: str | Path, pairs: Sequence[tuple[str, str]]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for src, dst in pairs:
            fh.write(f"{src}\t{dst}\n")


def read_truth(path: str | Path) -> list[tuple[str, str]]:
    pairs = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected two tab-separated fields")
            pairs.append((parts[0], parts[1]))
    return pairs


def write_ranked_tsv(path: str | Path, ranked: RankedAlignment, top_k: int | None = None) -> None:
    """TSV columns: source_id, rank, candidate_id, exchange_loss (6 decimals)."""
    with open(path, "w", encoding="utf-8") as fh:
        for i, cand, loss in ranked.iter_rows():
            limit = len(cand) if top_k is None else min(top_k, len(cand))
            src = ranked.source_id(i)
            for r in range(limit):
                fh.write(
                    f"{src}\t{r + 1}\t{ranked.candidate_id(int(cand[r]))}\t{loss[r]:.6f}\n"
                )


def write_report(path: str | Path, report: Mapping[str, object]) -> None:
    """Key: value lines, one metric per line."""
    with open(path, "w", encoding="utf-8") as fh:
        for key, value in report.items():
            fh.write(f"{key}: {value}\n")


def read_report(path: str | Path) -> dict[str, str]:
    out: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            key, _, value = line.partition(": ")
            out[key] = value
    return out
