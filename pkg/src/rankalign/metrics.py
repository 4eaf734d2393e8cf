"""Alignment quality metrics and run-to-run comparison."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .types import RankedAlignment


def _truth_items(truth) -> list[tuple[str, str]]:
    if isinstance(truth, Mapping):
        return sorted(truth.items())
    return sorted(truth)


def truth_fingerprint(truth) -> str:
    h = hashlib.sha256()
    for src, dst in _truth_items(truth):
        h.update(src.encode())
        h.update(b"\t")
        h.update(dst.encode())
        h.update(b"\n")
    return h.hexdigest()[:16]


def _ranks_for_truth(ranked: RankedAlignment, truth) -> list[int | None]:
    """1-based rank of each true target; None when absent from the list."""
    items = _truth_items(truth)
    if ranked.source_ids is not None:
        src_index = {s: i for i, s in enumerate(ranked.source_ids)}
    else:
        src_index = {str(i): i for i in range(ranked.n_sources)}
    missing = [src for src, _ in items if src not in src_index]
    if missing:
        raise KeyError(f"truth sources missing from ranked output: {missing}")
    if ranked.candidate_ids is not None:
        cand_index = {c: j for j, c in enumerate(ranked.candidate_ids)}
    else:
        cand_index = None

    ranks: list[int | None] = []
    for src, dst in items:
        i = src_index[src]
        if cand_index is not None:
            j = cand_index.get(dst)
            if j is None:
                ranks.append(None)
                continue
        else:
            j = int(dst)
        ranks.append(ranked.rank_of(i, j))
    return ranks


def hits_at_n(ranked: RankedAlignment, truth, n: int) -> float:
    """Fraction of truth pairs whose true target appears at rank <= n."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    ranks = _ranks_for_truth(ranked, truth)
    if not ranks:
        raise ValueError("empty truth set")
    hit = sum(1 for r in ranks if r is not None and r <= n)
    return hit / len(ranks)


def mrr(ranked: RankedAlignment, truth) -> float:
    """Mean reciprocal rank of the true targets; absent targets contribute 0."""
    ranks = _ranks_for_truth(ranked, truth)
    if not ranks:
        raise ValueError("empty truth set")
    return sum(1.0 / r for r in ranks if r is not None) / len(ranks)


def metrics_from_ranks(ranks: Sequence[int] | np.ndarray) -> dict[str, float]:
    """Hits@1/@10 and MRR from precomputed 1-based ranks (0 = absent)."""
    r = np.asarray(ranks, dtype=np.int64)
    if r.size == 0:
        raise ValueError("empty rank list")
    present = r > 0
    return {
        "hits@1": float(np.mean(present & (r == 1))),
        "hits@10": float(np.mean(present & (r <= 10))),
        "mrr": float(np.sum(np.where(present, 1.0 / np.maximum(r, 1), 0.0)) / r.size),
    }


@dataclass(frozen=True)
class MetricReport:
    metrics: dict[str, float]
    pair_count: int
    config_hash: str
    truth_hash: str
    extra: dict[str, object] = field(default_factory=dict)

    def as_lines(self) -> dict[str, object]:
        out: dict[str, object] = {}
        for key in ("hits@1", "hits@10", "mrr"):
            if key in self.metrics:
                out[key] = f"{self.metrics[key]:.6f}"
        for key, val in sorted(self.metrics.items()):
            if key not in out:
                out[key] = f"{val:.6f}"
        out["pairs"] = self.pair_count
        out["config_hash"] = self.config_hash
        out["truth_hash"] = self.truth_hash
        out.update(self.extra)
        return out


def build_report(
    ranked: RankedAlignment,
    truth,
    config_hash: str,
    hits_levels: Iterable[int] = (1, 10),
) -> MetricReport:
    values = {f"hits@{n}": hits_at_n(ranked, truth, n) for n in hits_levels}
    values["mrr"] = mrr(ranked, truth)
    items = _truth_items(truth)
    return MetricReport(
        metrics=values,
        pair_count=len(items),
        config_hash=config_hash,
        truth_hash=truth_fingerprint(truth),
    )


def compare_runs(reports: Sequence[MetricReport], baseline: int = 0) -> dict[int, dict[str, float]]:
    """Per-metric absolute deltas of every report against the baseline report."""
    if not reports:
        raise ValueError("no reports to compare")
    base = reports[baseline]
    for rep in reports:
        if rep.truth_hash != base.truth_hash or rep.pair_count != base.pair_count:
            raise ValueError("reports were computed against different truth sets")
    deltas: dict[int, dict[str, float]] = {}
    for idx, rep in enumerate(reports):
        deltas[idx] = {
            key: rep.metrics[key] - base.metrics[key]
            for key in base.metrics
            if key in rep.metrics
        }
    return deltas
