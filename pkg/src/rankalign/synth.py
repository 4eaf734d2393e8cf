"""Deterministic synthetic dataset generator for benchmarks and acceptance runs.

Side-1 embeddings are random unit vectors (optionally perturbed copies of a
shared latent, which makes the two directions carry independent noise);
side-2 counterparts are side-1 latents plus Gaussian noise, renormalized.
Noise is drawn independently per view.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from . import io
from .types import SIDE_1, SIDE_2, EmbeddingView, EntityCatalog


@dataclass(frozen=True)
class SyntheticDataset:
    catalog1: EntityCatalog
    catalog2: EntityCatalog
    views1: dict[str, EmbeddingView]
    views2: dict[str, EmbeddingView]
    truth: tuple[tuple[str, str], ...]


def _random_unit_rows(rng: np.random.Generator, m: int, d: int) -> np.ndarray:
    x = rng.standard_normal((m, d))
    x /= np.linalg.norm(x, axis=1, keepdims=True)
    return x


def _perturb(rng: np.random.Generator, base: np.ndarray, sigma: float) -> np.ndarray:
    if sigma == 0:
        return base.copy()
    noisy = base + sigma * rng.standard_normal(base.shape)
    norms = np.linalg.norm(noisy, axis=1, keepdims=True)
    norms[norms == 0] = 1.0
    return noisy / norms


def make_synthetic(
    seed: int,
    m1: int,
    m2: int,
    d: int,
    noise: float,
    overlap: float = 1.0,
    views: Sequence[str] = ("E",),
    side1_noise: float = 0.0,
) -> SyntheticDataset:
    """Build catalogs, per-view embeddings, and a truth table.

    ``overlap`` is the fraction of min(m1, m2) side-1 entities that have a
    true counterpart on side 2; the remaining side-2 rows are unrelated unit
    vectors. ``side1_noise`` > 0 perturbs side 1 away from the shared latent
    too, giving asymmetric per-direction noise.
    """
    if m1 < 1 or m2 < 1 or d < 1:
        raise ValueError("m1, m2, d must be >= 1")
    if noise < 0 or side1_noise < 0:
        raise ValueError("noise levels must be >= 0")
    if not 0.0 <= overlap <= 1.0:
        raise ValueError("overlap must lie in [0, 1]")

    rng = np.random.default_rng(seed)
    n_true = int(round(overlap * min(m1, m2)))
    ids1 = tuple(f"g1:{i:06d}" for i in range(m1))
    # row k of side 2 is the counterpart of row k of side 1 (for k < n_true),
    # mirroring the aligned id-list convention of real alignment corpora; the
    # directional augmentation relies on rows and columns sharing that index
    # space, and the solvers are never told about it
    ids2 = tuple(f"g2:{j:06d}" for j in range(m2))

    views1: dict[str, EmbeddingView] = {}
    views2: dict[str, EmbeddingView] = {}
    for name in views:
        latent = _random_unit_rows(rng, m1, d)
        side1 = _perturb(rng, latent, side1_noise)
        counterparts = _perturb(rng, latent[:n_true], noise)
        side2 = np.empty((m2, d))
        side2[:n_true] = counterparts
        if m2 > n_true:
            side2[n_true:] = _random_unit_rows(rng, m2 - n_true, d)
        views1[name] = EmbeddingView(view=name, matrix=side1.astype(np.float32))
        views2[name] = EmbeddingView(view=name, matrix=side2.astype(np.float32))

    truth = tuple((ids1[i], ids2[i]) for i in range(n_true))
    return SyntheticDataset(
        catalog1=EntityCatalog(side=SIDE_1, ids=ids1),
        catalog2=EntityCatalog(side=SIDE_2, ids=ids2),
        views1=views1,
        views2=views2,
        truth=truth,
    )


def write_dataset(dataset: SyntheticDataset, out_dir: str | Path) -> None:
    """Standard on-disk layout: g{1,2}.catalog, g{1,2}.{VIEW}.kgav, truth.tsv."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    io.write_catalog(out / "g1.catalog", dataset.catalog1)
    io.write_catalog(out / "g2.catalog", dataset.catalog2)
    for name, view in dataset.views1.items():
        io.write_view(out / f"g1.{name}.kgav", view)
    for name, view in dataset.views2.items():
        io.write_view(out / f"g2.{name}.kgav", view)
    io.write_truth(out / "truth.tsv", dataset.truth)
