"""Command-line pipeline: generate, estimate, predict, evaluate, sweep.

Every command records a JSON manifest next to its primary output; re-running
with the manifest's parameters reproduces the outputs byte for byte (no
timestamps, all randomness seeded). Files are written to a temp name and
renamed into place. Exit codes: 0 success, 2 invalid input or configuration,
3 unreadable file, 4 estimator failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from degreerank import __version__, ranking, sampler
from degreerank.errors import (
    DegreeRankError,
    EstimationError,
    InputFormatError,
    ValidationError,
)
from degreerank.generator import BaConfig, generate_ba
from degreerank.graph_core import degree_histogram, load_edge_list, save_edge_list
from degreerank.sampler import WalkConfig

EXIT_VALIDATION = 2
EXIT_IO = 3
EXIT_ESTIMATION = 4


def _replace_into(tmp: Path, final: Path) -> None:
    os.replace(tmp, final)


def _write_manifest(path: Path, command: str, parameters: dict, seeds: dict,
                    outputs: list[str]) -> None:
    doc = {
        "command": command,
        "version": __version__,
        "parameters": parameters,
        "seeds": seeds,
        "outputs": outputs,
    }
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")
    _replace_into(tmp, path)


def _manifest_path(out: Path) -> Path:
    return out.with_name(out.name + ".manifest.json")


def cmd_generate(args) -> int:
    cfg = BaConfig(n=args.nodes, n0=args.seed_nodes, m=args.m, rng_seed=args.seed)
    g = generate_ba(cfg)
    out = Path(args.out)
    manifest = _manifest_path(out)
    tmp = out.with_name(out.name + ".tmp")
    save_edge_list(g, tmp, comments=(f"manifest: {manifest.name}",))
    _replace_into(tmp, out)
    _write_manifest(
        manifest,
        "generate",
        parameters={"nodes": cfg.n, "seed_nodes": cfg.n0, "m": cfg.m, "out": str(out)},
        seeds={"generation": cfg.rng_seed},
        outputs=[str(out)],
    )
    hist = degree_histogram(g)
    print(
        f"nodes={g.node_count} edges={g.edge_count} "
        f"k_min={hist.k_min_true} k_max={hist.k_max_true}"
    )
    return 0


def _print_estimates(p: sampler.NetworkParams, hist) -> None:
    truth: dict[str, object] = {
        "n_est": hist.node_count,
        "k_min": hist.k_min_true,
        "k_max": hist.k_max_true,
        "d_avg": hist.d_avg_true,
    }
    try:
        true_fit = sampler.params_from_histogram(hist)
        truth.update(
            gamma=true_fit.gamma, c=true_fit.c, a=true_fit.a, b=true_fit.b
        )
    except DegreeRankError:
        pass  # e.g. regular graph: no ground-truth exponent
    print(f"{'parameter':<10} {'estimate':>16} {'ground_truth':>16}")
    for name in ("n_est", "k_min", "k_max", "d_avg", "gamma", "c", "a", "b"):
        est = getattr(p, name)
        ref = truth.get(name, "-")
        est_s = f"{est:.6g}" if isinstance(est, float) else str(est)
        ref_s = f"{ref:.6g}" if isinstance(ref, float) else str(ref)
        print(f"{name:<10} {est_s:>16} {ref_s:>16}")


def cmd_estimate(args) -> int:
    g = load_edge_list(args.graph)
    hist = degree_histogram(g)
    out = Path(args.out)
    manifest = _manifest_path(out)

    if args.ground_truth:
        params = sampler.params_from_histogram(hist)
        seeds = {}
        parameters = {"graph": args.graph, "ground_truth": True, "out": str(out)}
    else:
        if args.samples is not None:
            samples = args.samples
        elif args.budget is not None:
            # default sampling budget: 1% of the caller's node-budget hint
            samples = max(2, args.budget // 100)
        else:
            raise ValidationError("either --samples or --budget is required")
        cfg = WalkConfig(
            sample_count=samples,
            rng_seed=args.seed,
            burn_in_steps=args.burn_in,
            thinning_interval=args.thin,
        )
        params, steps = sampler.estimate_with_retry(g, cfg, args.retry_cap)
        print(f"walk steps used: {steps}")
        seeds = {"walk": args.seed}
        parameters = {
            "graph": args.graph,
            "samples": samples,
            "burn_in": args.burn_in,
            "thin": args.thin,
            "retry_cap": args.retry_cap,
            "out": str(out),
        }

    tmp = out.with_name(out.name + ".tmp")
    sampler.save_params(params, tmp, manifest=manifest.name)
    _replace_into(tmp, out)
    _write_manifest(manifest, "estimate", parameters, seeds, [str(out)])
    _print_estimates(params, hist)
    return 0


def cmd_predict(args) -> int:
    params = sampler.load_params(args.params)
    if args.degree is not None:
        rank = ranking.predict_rank(params, args.degree)
        if args.clamp:
            rank = ranking.rank_clamp(rank, params)
        print(rank)
    else:
        print("degree,predicted_rank")
        for k in range(params.k_min, params.k_max + 1):
            rank = ranking.predict_rank(params, k)
            if args.clamp:
                rank = ranking.rank_clamp(rank, params)
            print(f"{k},{rank!r}")
    return 0


def cmd_evaluate(args) -> int:
    g = load_edge_list(args.graph)
    if args.ground_truth_params:
        params = sampler.params_from_histogram(degree_histogram(g))
        parameters = {"graph": args.graph, "ground_truth_params": True}
    else:
        params = sampler.load_params(args.params)
        parameters = {"graph": args.graph, "params": args.params}

    table, report = ranking.evaluate(g, params)
    table_out, report_out = Path(args.table_out), Path(args.report_out)
    manifest = _manifest_path(report_out)
    parameters.update(table_out=str(table_out), report_out=str(report_out))

    tmp = table_out.with_name(table_out.name + ".tmp")
    ranking.save_rank_table(table, tmp, comments=(f"manifest: {manifest.name}",))
    _replace_into(tmp, table_out)
    tmp = report_out.with_name(report_out.name + ".tmp")
    ranking.save_report(report, tmp, manifest=manifest.name)
    _replace_into(tmp, report_out)
    _write_manifest(
        manifest, "evaluate", parameters, {}, [str(table_out), str(report_out)]
    )
    print(report.summary_line())
    return 0


def _sweep_one(size: int, rep: int, args, run_dir: Path, gen_seed: int,
               walk_seed: int) -> ranking.ErrorReport:
    cfg = BaConfig(n=size, n0=args.seed_nodes, m=args.m, rng_seed=gen_seed)
    g = generate_ba(cfg)
    samples = max(2, int(size * args.sample_pct / 100.0))
    wcfg = WalkConfig(
        sample_count=samples,
        rng_seed=walk_seed,
        burn_in_steps=args.burn_in,
        thinning_interval=args.thin,
    )
    params, steps = sampler.estimate_with_retry(g, wcfg, args.retry_cap)
    table, report = ranking.evaluate(g, params)

    manifest = run_dir / "run.manifest.json"
    sampler.save_params(params, run_dir / "params.json", manifest=manifest.name)
    ranking.save_rank_table(
        table, run_dir / "table.csv", comments=(f"manifest: {manifest.name}",)
    )
    ranking.save_report(report, run_dir / "report.json", manifest=manifest.name)
    _write_manifest(
        manifest,
        "sweep-run",
        parameters={
            "nodes": size,
            "repeat": rep,
            "m": args.m,
            "seed_nodes": args.seed_nodes,
            "samples": samples,
            "burn_in": args.burn_in,
            "thin": args.thin,
            "walk_steps_used": steps,
        },
        seeds={"generation": gen_seed, "walk": walk_seed},
        outputs=["params.json", "table.csv", "report.json"],
    )
    return report


def cmd_sweep(args) -> int:
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    summary_rows = []
    run_index = 0
    for size in args.sizes:
        reports = []
        for rep in range(args.repeats):
            run_dir = out_dir / f"n{size}_r{rep}"
            run_dir.mkdir(parents=True, exist_ok=True)
            gen_seed = args.gen_seed + run_index
            walk_seed = args.walk_seed + run_index
            run_index += 1
            try:
                reports.append(_sweep_one(size, rep, args, run_dir, gen_seed, walk_seed))
            except DegreeRankError as exc:
                # record the failure and keep sweeping
                _write_manifest(
                    run_dir / "run.manifest.json",
                    "sweep-run",
                    parameters={"nodes": size, "repeat": rep, "error": str(exc)},
                    seeds={"generation": gen_seed, "walk": walk_seed},
                    outputs=[],
                )
                print(f"run n={size} r={rep} failed: {exc}", file=sys.stderr)
        if not reports:
            continue
        errs = [r.average_error for r in reports]
        pcts = [r.pct_error for r in reports]
        mean_err = sum(errs) / len(errs)
        std_err = (sum((e - mean_err) ** 2 for e in errs) / len(errs)) ** 0.5
        summary_rows.append(
            (size, mean_err, std_err, sum(pcts) / len(pcts), len(reports))
        )

    summary = out_dir / "summary.csv"
    tmp = summary.with_name(summary.name + ".tmp")
    with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("# manifest: sweep.manifest.json\n")
        fh.write("nodes,average_error_mean,average_error_std,pct_error_mean,runs\n")
        for size, mean_err, std_err, mean_pct, runs in summary_rows:
            fh.write(f"{size},{mean_err!r},{std_err!r},{mean_pct!r},{runs}\n")
    _replace_into(tmp, summary)
    _write_manifest(
        out_dir / "sweep.manifest.json",
        "sweep",
        parameters={
            "sizes": list(args.sizes),
            "repeats": args.repeats,
            "m": args.m,
            "seed_nodes": args.seed_nodes,
            "sample_pct": args.sample_pct,
            "burn_in": args.burn_in,
            "thin": args.thin,
            "out_dir": str(out_dir),
        },
        seeds={"generation_base": args.gen_seed, "walk_base": args.walk_seed},
        outputs=[str(summary)],
    )
    print(f"{'nodes':>8} {'avg_error':>12} {'std':>12} {'pct_error':>10} {'runs':>5}")
    for size, mean_err, std_err, mean_pct, runs in summary_rows:
        print(f"{size:>8} {mean_err:>12.2f} {std_err:>12.2f} {mean_pct:>9.4f}% {runs:>5}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degreerank",
        description="Predict degree-centrality ranks in scale-free networks "
        "from a node's degree and sampled network parameters.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="generate a preferential-attachment graph")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--m", type=int, default=10, help="links per arriving node")
    p.add_argument("--seed-nodes", type=int, default=10, help="seed graph size")
    p.add_argument("--seed", type=int, default=0, help="generation RNG seed")
    p.add_argument("--out", required=True, help="edge-list output path")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("estimate", help="estimate network parameters by random walk")
    p.add_argument("--graph", required=True, help="edge-list input path")
    p.add_argument("--samples", type=int, default=None, help="walk observations to retain")
    p.add_argument("--budget", type=int, default=None,
                   help="node-budget hint; samples defaults to 1%% of it")
    p.add_argument("--burn-in", type=int, default=sampler.DEFAULT_BURN_IN)
    p.add_argument("--thin", type=int, default=sampler.DEFAULT_THINNING)
    p.add_argument("--seed", type=int, default=0, help="walk RNG seed")
    p.add_argument("--retry-cap", type=int, default=5,
                   help="max sample doublings when no collisions occur")
    p.add_argument("--ground-truth", action="store_true",
                   help="skip the walk; fit from the exact degree histogram")
    p.add_argument("--out", required=True, help="parameter JSON output path")
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("predict", help="predict the rank of a degree")
    p.add_argument("--params", required=True, help="parameter JSON path")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--degree", type=int, default=None)
    group.add_argument("--all-degrees", action="store_true",
                       help="print predictions for k_min..k_max")
    p.add_argument("--clamp", action="store_true",
                   help="clamp predictions into [1, n_est]")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("evaluate", help="compare predicted vs actual ranks")
    p.add_argument("--graph", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--params", default=None)
    group.add_argument("--ground-truth-params", action="store_true")
    p.add_argument("--table-out", required=True, help="per-degree CSV output")
    p.add_argument("--report-out", required=True, help="error-report JSON output")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("sweep", help="full pipeline across sizes and repeats")
    p.add_argument("--sizes", type=int, nargs="+", required=True)
    p.add_argument("--repeats", type=int, default=1)
    p.add_argument("--out-dir", required=True)
    p.add_argument("--m", type=int, default=10)
    p.add_argument("--seed-nodes", type=int, default=10)
    p.add_argument("--sample-pct", type=float, default=1.0,
                   help="walk sample size as %% of network size")
    p.add_argument("--burn-in", type=int, default=sampler.DEFAULT_BURN_IN)
    p.add_argument("--thin", type=int, default=sampler.DEFAULT_THINNING)
    p.add_argument("--retry-cap", type=int, default=5)
    p.add_argument("--gen-seed", type=int, default=0, help="generation seed base")
    p.add_argument("--walk-seed", type=int, default=10_000, help="walk seed base")
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EstimationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ESTIMATION
    except (InputFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ValidationError, DegreeRankError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
