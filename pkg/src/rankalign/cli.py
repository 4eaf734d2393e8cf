"""Command line interface: align, synth, bench, eval."""

from __future__ import annotations

import json
from pathlib import Path

import click

from . import io, metrics, pipeline, solver


def _parse_weights(text: str) -> tuple[float, float, float, float]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise click.BadParameter("expected four comma-separated weights: E,ST,AT,AR")
    return tuple(float(p) for p in parts)  # type: ignore[return-value]


def _config_from_options(config_file, **overrides) -> pipeline.AlignConfig:
    base: dict = {}
    if config_file:
        base = json.loads(Path(config_file).read_text())
        if "weights" in base:
            base["weights"] = tuple(base["weights"])
        if "sinkhorn" in base:
            base["sinkhorn"] = solver.SinkhornConfig(**base["sinkhorn"])
    base.update({k: v for k, v in overrides.items() if v is not None})
    return pipeline.AlignConfig(**base)


@click.group()
def main():
    """Ranked entity alignment over multi-view embedding similarities."""


@main.command()
@click.option("--config", "config_file", type=click.Path(exists=True), default=None,
              help="JSON config file; flags override its fields.")
@click.option("--data", "data_dir", type=click.Path(exists=True), default=None,
              help="Dataset directory (catalogs, view embeddings, optional truth.tsv).")
@click.option("--similarity-input", type=click.Path(exists=True), default=None,
              help="Skip views and align an external similarity matrix (plug-in mode).")
@click.option("--out", "out_dir", type=click.Path(), required=True)
@click.option("--weights", default=None, help="E,ST,AT,AR fusion weights (default 1.00,0.75,0.75,0.15).")
@click.option("--objective", type=click.Choice(["min", "max"]), default=None)
@click.option("--solver", "solver_name", type=click.Choice(["lapjv", "sinkhorn"]), default=None)
@click.option("--directional", type=bool, default=None, help="Add transpose information (default true).")
@click.option("--top-k", type=int, default=None, help="Truncate ranked output to K candidates per entity.")
def align(config_file, data_dir, similarity_input, out_dir, weights, objective,
          solver_name, directional, top_k):
    """Fuse, pad, augment, solve, rank, and (with truth.tsv) evaluate."""
    cfg = _config_from_options(
        config_file,
        data_dir=data_dir,
        similarity_input=similarity_input,
        out_dir=out_dir,
        weights=_parse_weights(weights) if weights else None,
        objective=objective,
        solver_name=solver_name,
        directional=directional,
        top_k=top_k,
    )
    result = pipeline.run_align(cfg)
    click.echo(f"config_hash: {result.config_hash}")
    click.echo(f"objective_value: {result.assignment.objective_value:.6f}")
    if result.report is not None:
        for key, value in result.report.as_lines().items():
            click.echo(f"{key}: {value}")
    click.echo(f"wrote {Path(cfg.out_dir) / 'ranked.tsv'}")


@main.command()
@click.option("--seed", type=int, default=0)
@click.option("--m1", type=int, required=True)
@click.option("--m2", type=int, required=True)
@click.option("--dim", type=int, default=64)
@click.option("--noise", type=float, default=0.3)
@click.option("--overlap", type=float, default=1.0)
@click.option("--views", default="E", help="Comma-separated view names to generate.")
@click.option("--side1-noise", type=float, default=0.0,
              help="Also perturb side 1, giving asymmetric per-direction noise.")
@click.option("--out", "out_dir", type=click.Path(), required=True)
def synth(seed, m1, m2, dim, noise, overlap, views, side1_noise, out_dir):
    """Generate a deterministic synthetic dataset with a truth table."""
    dataset = pipeline.make_synthetic(
        seed=seed, m1=m1, m2=m2, d=dim, noise=noise, overlap=overlap,
        views=tuple(v.strip() for v in views.split(",")),
        side1_noise=side1_noise,
    )
    pipeline.write_dataset(dataset, out_dir)
    click.echo(f"wrote dataset with {len(dataset.truth)} truth pairs to {out_dir}")


@main.command()
@click.option("--sizes", default="100,1000", help="Comma-separated instance sizes.")
@click.option("--seed", type=int, default=0)
@click.option("--dim", type=int, default=64)
@click.option("--noise", type=float, default=0.3)
@click.option("--solvers", default="lapjv,sinkhorn")
@click.option("--out", "out_path", type=click.Path(), default=None, help="Optional TSV output.")
def bench(sizes, seed, dim, noise, solvers, out_path):
    """Timing and accuracy across sizes (synthetic data)."""
    rows = pipeline.scale_benchmark(
        sizes=[int(s) for s in sizes.split(",")],
        cfg=pipeline.AlignConfig(data_dir="-", top_k=10),
        seed=seed,
        d=dim,
        noise=noise,
        solvers=tuple(s.strip() for s in solvers.split(",")),
    )
    header = list(rows[0].keys())
    click.echo("\t".join(header))
    lines = []
    for row in rows:
        line = "\t".join(str(row[h]) for h in header)
        click.echo(line)
        lines.append(line)
    if out_path:
        Path(out_path).write_text("\t".join(header) + "\n" + "\n".join(lines) + "\n")


@main.command("eval")
@click.option("--ranked", "ranked_path", type=click.Path(exists=True), required=True,
              help="Ranked TSV produced by align.")
@click.option("--truth", "truth_path", type=click.Path(exists=True), required=True)
@click.option("--report", "report_path", type=click.Path(), default=None)
def eval_cmd(ranked_path, truth_path, report_path):
    """Recompute Hits@1/@10 and MRR from a ranked TSV plus a truth TSV."""
    ranks_by_source: dict[str, dict[str, int]] = {}
    with open(ranked_path, encoding="utf-8") as fh:
        for line in fh:
            src, rank, cand, _loss = line.rstrip("\n").split("\t")
            ranks_by_source.setdefault(src, {})[cand] = int(rank)
    truth = io.read_truth(truth_path)
    missing = [src for src, _ in truth if src not in ranks_by_source]
    if missing:
        raise click.ClickException(f"truth sources missing from ranked file: {missing[:5]}")
    ranks = [ranks_by_source[src].get(dst, 0) for src, dst in truth]
    values = metrics.metrics_from_ranks(ranks)
    lines = {k: f"{v:.6f}" for k, v in values.items()}
    lines["pairs"] = len(truth)
    for key, value in lines.items():
        click.echo(f"{key}: {value}")
    if report_path:
        io.write_report(report_path, lines)


if __name__ == "__main__":
    main()
