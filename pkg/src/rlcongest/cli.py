"""Command-line interface for rlcongest."""

from __future__ import annotations

import logging
import sys
from pathlib import Path
from typing import Any, NoReturn

import click

from .algos import (
    ALGORITHMS,
    bound_violations,
    downcast,
    fit_round_model,
    flood_bfs,
    node_ids,
    round_bound,
    round_scan,
    run_algorithm,
    tree_round_bound,
    upcast,
)
from .config import BACKENDS, Config
from .exceptions import ParameterError, RLCongestError, SimulationError
from .gadget import (
    GadgetSpec,
    biconditional_holds,
    build_eq_gadget,
    disagreeing_pairs,
    gadget_round_scan,
    random_spec,
    trend_violations,
    verify_gadget_property,
)
from .graph import (
    FAMILIES,
    assign_random_ids,
    assign_unique_ids,
    eccentricity,
    gen_connected_gnm,
    gen_erdos_renyi,
    gen_family,
    largest_component,
    metrics,
    uniform_colors,
)
from .resistance import experiment_locality, globality_witness
from .storage import (
    GADGET_COLUMNS,
    SCAN_COLUMNS,
    default_grouping,
    generate_run_name,
    read_colors,
    read_graph,
    read_json,
    read_manifest,
    read_rows_csv,
    summarize_rows,
    write_colors,
    write_distance_csv,
    write_graph,
    write_json,
    write_manifest,
    write_roundlog,
    write_rows_csv,
)
from .utils import get_logger, output_dir_lock, setup_logging, timed
from .wl import (
    gdwl_step,
    kfwl_step,
    ktuple_initial_colors,
    kwl_distinguishes,
    kwl_refine_stable,
    kwl_step,
    rd_matrix,
    same_partition,
    spd_matrix,
    wl_distinguishes,
    wl_refine_stable,
    wl_step_reference,
)

EXIT_INVALID = 1
EXIT_VIOLATION = 2

GRAPH_FAMILIES = (*FAMILIES, "er", "gnm")
WL_VARIANTS = ("wl", "kwl", "kfwl", "gdwl")
SIM_ALGORITHMS = ("flood", "upcast", "downcast", *ALGORITHMS)


def _fail(logger: logging.Logger, e: RLCongestError) -> NoReturn:
    logger.error(f"Error: {e}")
    sys.exit(EXIT_VIOLATION if isinstance(e, SimulationError) else EXIT_INVALID)


def _load(ctx: click.Context, **cli_args: Any) -> Config:
    """Resolve the run Config: a replayed manifest or file/env, then CLI flags."""
    base = ctx.obj.get("base_config")
    if base is not None:
        return base.with_overrides(cli_args)
    return Config.load(config_file=ctx.obj.get("config_path"), cli_args=cli_args)


def _output_dir(config: Config, command: str) -> Path:
    """Configured output directory, or a fresh timestamped one under the working directory."""
    if config.output_dir:
        return Path(config.output_dir)
    return Path.cwd() / generate_run_name(command)


def _flags(ctx: click.Context) -> dict[str, Any]:
    return {k: (list(v) if isinstance(v, tuple) else v) for k, v in ctx.params.items()}


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--config", "-c", type=click.Path(exists=True), help="Config file path")
@click.option("--verbose", "-v", is_flag=True, help="Verbose output")
@click.option("--quiet", "-q", is_flag=True, help="Quiet mode (errors only)")
@click.pass_context
def cli(ctx, config, verbose, quiet):
    """rlcongest: WL refinement in the RL-CONGEST model, with its experiments."""
    ctx.ensure_object(dict)

    if quiet:
        level = logging.ERROR
    elif verbose:
        level = logging.DEBUG
    else:
        level = logging.INFO

    setup_logging(level=level, quiet=False)
    ctx.obj["logger"] = get_logger()
    ctx.obj["config_path"] = Path(config) if config else None


@cli.command()
@click.option("--family", "-f", type=click.Choice(GRAPH_FAMILIES), required=True, help="Graph family")
@click.option("--n", "n", type=int, required=True, help="Node count")
@click.option("--p", "p", type=float, help="Edge probability for er (default: 5/n)")
@click.option("--m", "m", type=int, help="Edge count for gnm")
@click.option("--seed", "-s", type=int, help="Generator seed (default: from config)")
@click.option("--largest", is_flag=True, help="Keep only the largest connected component")
@click.option("--ids", type=click.Choice(["none", "unique", "random"]), default="none", help="Node ID labels")
@click.option("--output", "-o", type=click.Path(), help="Graph file (.txt or .json)")
@click.option("--output-dir", type=click.Path(), help="Directory for graph.txt and the manifest")
@click.pass_context
def gen(ctx, family, n, p, m, seed, largest, ids, output, output_dir):
    """Generate a graph file."""
    logger = ctx.obj["logger"]
    config = _load(ctx, seed=seed, output_dir=output_dir)
    try:
        if family == "er":
            g = gen_erdos_renyi(n, p if p is not None else min(1.0, 5.0 / max(n, 1)), config.seed)
        elif family == "gnm":
            if m is None:
                raise ParameterError("gnm needs --m")
            g = gen_connected_gnm(n, m, config.seed)
        else:
            g = gen_family(family, n)
        if largest:
            g = largest_component(g)
        if ids == "unique":
            g = assign_unique_ids(g)
        elif ids == "random":
            g = assign_random_ids(g, config.seed)

        path = Path(output) if output else _output_dir(config, "gen") / "graph.txt"
        write_graph(path, g)
        write_manifest(path.parent, "gen", _flags(ctx), config, {"graph": path})
        logger.info(f"Wrote {family} graph with {g.n} nodes and {g.m} edges to {path}")
    except RLCongestError as e:
        _fail(logger, e)


@cli.command()
@click.option("--graph", "-g", type=click.Path(exists=True), required=True, help="Graph file")
@click.option("--colors", "-x", type=click.Path(exists=True), help="Input colors (default: uniform)")
@click.option("--variant", type=click.Choice(WL_VARIANTS), default="wl", help="Refinement variant")
@click.option("--k", "k", type=int, default=2, help="Tuple size for kwl/kfwl")
@click.option("--distance", type=click.Choice(["spd", "rd"]), default="spd", help="Distance for gdwl")
@click.option("--stable", is_flag=True, help="Refine until the partition is stable")
@click.option("--against", type=click.Path(exists=True), help="Second graph: run the isomorphism test instead")
@click.option("--output", "-o", type=click.Path(), help="Output colors file")
@click.pass_context
def wl(ctx, graph, colors, variant, k, distance, stable, against, output):
    """Run a sequential WL refinement (or a WL isomorphism test)."""
    logger = ctx.obj["logger"]
    config = _load(ctx)
    try:
        g = read_graph(Path(graph))
        x = read_colors(Path(colors)) if colors else uniform_colors(g.n)

        if against:
            other = read_graph(Path(against))
            if variant == "wl":
                verdict = wl_distinguishes(g, other)
            elif variant in ("kwl", "kfwl"):
                verdict = kwl_distinguishes(g, other, k, variant, config.tuple_budget)
            else:
                raise ParameterError("The isomorphism test supports wl, kwl and kfwl")
            click.echo("distinguished" if verdict else "indistinguishable")
            return

        out = Path(output) if output else _output_dir(config, "wl") / "colors.txt"
        if variant == "wl":
            y = wl_refine_stable(g, x)[0] if stable else wl_step_reference(g, x)
        elif variant in ("kwl", "kfwl"):
            if stable:
                y = kwl_refine_stable(g, k, variant, x, config.tuple_budget)[0]
            else:
                step = kwl_step if variant == "kwl" else kfwl_step
                y = step(g, k, ktuple_initial_colors(g, k, x, config.tuple_budget), config.tuple_budget)
        else:
            dist = spd_matrix(g) if distance == "spd" else rd_matrix(g)
            write_distance_csv(out.with_name("distance.csv"), dist)
            y = gdwl_step(g, dist, x)
            for _ in range(g.n if stable else 0):
                nxt = gdwl_step(g, dist, y)
                if same_partition(y, nxt):
                    break
                y = nxt
        write_colors(out, y)
        logger.info(f"{variant}: {len(set(y))} color classes written to {out}")
    except RLCongestError as e:
        _fail(logger, e)


@cli.command()
@click.option("--algo", "-a", type=click.Choice(SIM_ALGORITHMS), required=True, help="Algorithm")
@click.option("--graph", "-g", type=click.Path(exists=True), required=True, help="Graph file")
@click.option("--colors", "-x", type=click.Path(exists=True), help="Input colors (default: uniform)")
@click.option("--w", "w", type=int, help="Bandwidth in words (default: from config)")
@click.option("--root", type=int, default=0, help="Root for flood/upcast/downcast")
@click.option("--backend", type=click.Choice(BACKENDS), help="Routing backend for vedge")
@click.option("--tokens-per-node", "-L", type=int, help="Token load for vedge")
@click.option("--kappa", type=float, help="Step-budget slack")
@click.option("--threads", type=int, help="Node-level threads per round")
@click.option("--max-rounds", type=int, help="Round cap")
@click.option("--seed", "-s", type=int, help="Overlay seed for vedge")
@click.option("--output-dir", "-o", type=click.Path(), help="Output directory")
@click.option("--no-verify", is_flag=True, help="Skip the sequential WL cross-check")
@click.pass_context
def sim(ctx, algo, graph, colors, w, root, backend, tokens_per_node, kappa, threads, max_rounds, seed, output_dir, no_verify):
    """Run one algorithm on the simulator and export its RoundLog."""
    logger = ctx.obj["logger"]
    config = _load(
        ctx,
        width=w,
        backend=backend,
        tokens_per_node=tokens_per_node,
        kappa=kappa,
        threads=threads,
        max_rounds=max_rounds,
        seed=seed,
        output_dir=output_dir,
    )
    out = _output_dir(config, "sim")
    violated = False
    try:
        with output_dir_lock(out):
            g = read_graph(Path(graph))
            x = read_colors(Path(colors)) if colors else uniform_colors(g.n)
            outputs: dict[str, Path] = {}
            run_kwargs = {"max_rounds": config.max_rounds, "threads": config.threads}

            if algo in ("flood", "upcast", "downcast"):
                tree, log = flood_bfs(g, root, config.width, **run_kwargs)
                tree_info = {
                    "root": tree.root,
                    "parent": list(tree.parent),
                    "depth": list(tree.depth),
                    "height": tree.height,
                }
                outputs["tree"] = write_json(out / "tree.json", tree_info)
                if algo == "flood":
                    cap = int(eccentricity(g, root)) + 1
                elif algo == "upcast":
                    collected, log = upcast(g, tree, [[c] for c in x], config.width, **run_kwargs)
                    outputs["collected"] = write_colors(out / "collected.txt", collected)
                    cap = tree_round_bound(tree.height, g.n, config.width, config.tree_slack)
                else:
                    uids = node_ids(g)
                    messages = [(uids[u], x[u]) for u in range(g.n) if u != tree.root]
                    delivered, log = downcast(g, tree, messages, config.width, **run_kwargs)
                    outputs["delivered"] = write_json(out / "delivered.json", delivered)
                    cap = tree_round_bound(tree.height, len(messages), config.width, config.tree_slack)
            else:
                y, log = run_algorithm(algo, g, x, config.width, config)
                outputs["colors"] = write_colors(out / "colors.txt", y)
                if not no_verify and tuple(y) != wl_step_reference(g, x):
                    logger.error(f"{algo} disagrees with the sequential WL step")
                    violated = True
                gm = metrics(g)
                cap = round_bound(algo, int(gm.diameter), g.m, gm.max_degree, config.width, config)

            outputs.update(write_roundlog(log, out))
            rounds = log.transmission_rounds
            write_manifest(
                out, "sim", _flags(ctx), config, outputs, {"summary": log.summary(), "bound": cap}
            )
            logger.info(f"{algo}: {rounds} rounds, {log.total_words} words (bound {cap})")
            if cap is not None and rounds > cap:
                logger.error(f"{algo} used {rounds} rounds, above the bound {cap}")
                violated = True
    except RLCongestError as e:
        _fail(logger, e)
    if violated:
        sys.exit(EXIT_VIOLATION)


@cli.group()
def gadget():
    """Equality gadget graphs: build, verify and scan."""


@gadget.command("build")
@click.option("--n", "n", type=int, required=True, help="Gadget scale")
@click.option("--m", "m", type=int, required=True, help="Input length (n <= m <= n^2)")
@click.option("--a", "a", help="Alice's bits (default: random)")
@click.option("--b", "b", help="Bob's bits (default: random)")
@click.option("--equal", is_flag=True, help="Draw a random a and set b = a")
@click.option("--path-len", type=int, default=0, help="Extra nodes between the two x nodes")
@click.option("--seed", "-s", type=int, help="Seed for random inputs")
@click.option("--output-dir", "-o", type=click.Path(), help="Output directory")
@click.pass_context
def gadget_build(ctx, n, m, a, b, equal, path_len, seed, output_dir):
    """Build a gadget graph with its role map and initial colors."""
    logger = ctx.obj["logger"]
    config = _load(ctx, seed=seed, output_dir=output_dir)
    out = _output_dir(config, "gadget_build")
    try:
        if a is not None and b is not None:
            spec = GadgetSpec(n, m, tuple(int(c) for c in a), tuple(int(c) for c in b), path_len)
        else:
            spec = random_spec(n, m, config.seed, equal, path_len)
        gg = build_eq_gadget(spec)
        outputs = {
            "graph": write_graph(out / "gadget.txt", gg.graph),
            "roles": write_json(out / "roles.json", gg.role_map()),
            "colors": write_colors(out / "colors.txt", gg.colors),
        }
        write_manifest(out, "gadget build", _flags(ctx), config, outputs)
        logger.info(f"Gadget n={n} m={m}: {gg.graph.n} nodes, {gg.graph.m} edges in {out}")
    except ValueError as e:
        logger.error(f"Error: bits must be 0/1 strings ({e})")
        sys.exit(EXIT_INVALID)
    except RLCongestError as e:
        _fail(logger, e)


@gadget.command("verify")
@click.option("--roles", "-r", type=click.Path(exists=True), required=True, help="roles.json from gadget build")
@click.option("--colors", "-y", type=click.Path(exists=True), help="Refined colors (default: one WL step)")
@click.pass_context
def gadget_verify(ctx, roles, colors):
    """Check the w-node color agreement against a == b."""
    logger = ctx.obj["logger"]
    try:
        spec = GadgetSpec.from_dict(read_json(Path(roles))["spec"])
        gg = build_eq_gadget(spec)
        y = read_colors(Path(colors)) if colors else wl_step_reference(gg.graph, gg.colors)
        agree = verify_gadget_property(gg, y)
        holds = biconditional_holds(gg, y)
    except (KeyError, ValueError) as e:
        logger.error(f"Error: malformed role map ({e})")
        sys.exit(EXIT_INVALID)
    except RLCongestError as e:
        _fail(logger, e)
    click.echo(f"a == b: {spec.a == spec.b}")
    click.echo(f"w colors agree: {agree}")
    if not agree:
        click.echo(f"disagreeing pairs: {disagreeing_pairs(gg, y)}")
    if not holds:
        logger.error("Biconditional fails for this gadget")
        sys.exit(EXIT_VIOLATION)


@gadget.command("scan")
@click.option("--n", "n", type=int, required=True, help="Gadget scale")
@click.option("--m", "m_list", type=int, multiple=True, help="Input lengths (repeatable)")
@click.option("--w", "w_list", type=int, multiple=True, help="Bandwidths (repeatable)")
@click.option("--path-len", type=int, default=0, help="Extra nodes between the two x nodes")
@click.option("--seed", "-s", type=int, help="Seed for random inputs")
@click.option("--parallel", "-p", type=int, help="Number of parallel cells")
@click.option("--output-dir", "-o", type=click.Path(), help="Output directory")
@click.pass_context
def gadget_scan(ctx, n, m_list, w_list, path_len, seed, parallel, output_dir):
    """Round counts of wl_congest over gadgets, with trend checks."""
    logger = ctx.obj["logger"]
    config = _load(ctx, seed=seed, parallel_jobs=parallel, output_dir=output_dir)
    out = _output_dir(config, "gadget_scan")
    try:
        with output_dir_lock(out):
            rows, failures = gadget_round_scan(
                n, m_list, w_list, config.seed, path_len, config.kappa, config.parallel_jobs, config.max_rounds
            )
            outputs = {"scan": write_rows_csv(out / "gadget_scan.csv", [r.to_dict() for r in rows], GADGET_COLUMNS)}
            if failures:
                outputs["failures"] = write_json(out / "failed_cells.json", failures)
                logger.warning(f"Wrote {len(failures)} failed cells to: {outputs['failures']}")
            problems = trend_violations(rows)
            write_manifest(out, "gadget scan", _flags(ctx), config, outputs, {"trend_violations": problems})
    except RLCongestError as e:
        _fail(logger, e)
    if failures or problems:
        logger.error(f"Gadget scan: {len(failures)} failed cells, {len(problems)} trend violations")
        sys.exit(EXIT_VIOLATION)
    logger.info(f"Gadget scan complete: {len(rows)} cells")


@cli.command()
@click.option("--count", type=int, default=200, help="Number of sampled graphs")
@click.option("--n-min", type=int, default=20, help="Smallest sampled n")
@click.option("--n-max", type=int, default=100, help="Largest sampled n")
@click.option("--witness", type=int, multiple=True, help="Also check the path/cycle witness at this n")
@click.option("--seed", "-s", type=int, help="Dataset seed")
@click.option("--parallel", "-p", type=int, help="Number of parallel jobs")
@click.option("--output-dir", "-o", type=click.Path(), help="Output directory")
@click.pass_context
def locality(ctx, count, n_min, n_max, witness, seed, parallel, output_dir):
    """Score the resistance-based cut predicates against Tarjan on ER graphs."""
    logger = ctx.obj["logger"]
    config = _load(ctx, seed=seed, parallel_jobs=parallel, output_dir=output_dir)
    out = _output_dir(config, "locality")
    try:
        with output_dir_lock(out):
            with timed(f"Locality experiment over {count} graphs"):
                report = experiment_locality(
                    count, (n_min, n_max), seed=config.seed, parallel_jobs=config.parallel_jobs, tol=config.predicate_tol
                )
            summary = report.summary()
            summary["witnesses"] = [globality_witness(n).to_dict() for n in witness]
            outputs = {
                "summary": write_json(out / "locality_summary.json", summary),
                "graphs": write_rows_csv(
                    out / "locality_graphs.csv",
                    report.rows(),
                    (
                        "index",
                        "seed",
                        "n_sampled",
                        "p",
                        "component_n",
                        "component_m",
                        "bridges",
                        "cut_vertices",
                        "edge_correct",
                        "node_correct",
                    ),
                ),
            }
            write_manifest(out, "locality", _flags(ctx), config, outputs)
    except RLCongestError as e:
        _fail(logger, e)

    click.echo(f"edge accuracy: {report.edge_accuracy}")
    click.echo(f"node accuracy: {report.node_accuracy}")
    exact = report.count == 0 or (report.edge_accuracy == 1.0 and report.node_accuracy == 1.0)
    if not exact or not all(w["holds"] for w in summary["witnesses"]):
        logger.error("Local predicates disagree with the classical oracle")
        sys.exit(EXIT_VIOLATION)


@cli.command()
@click.argument("csv_file", type=click.Path(exists=True))
@click.option("--group-by", "-g", multiple=True, help="Grouping column (repeatable)")
@click.option("--format", "tablefmt", default="github", help="tabulate table format")
@click.pass_context
def report(ctx, csv_file, group_by, tablefmt):
    """Summarize a scan or locality CSV as a table."""
    logger = ctx.obj["logger"]
    try:
        rows = read_rows_csv(Path(csv_file))
        keys = list(group_by) or (default_grouping(list(rows[0])) if rows else [])
        click.echo(summarize_rows(rows, keys, tablefmt))
    except RLCongestError as e:
        _fail(logger, e)


@cli.command()
@click.option("--n", "n_list", type=int, multiple=True, help="Node counts (repeatable)")
@click.option("--m", "m_list", type=int, multiple=True, help="Edge counts (repeatable)")
@click.option("--family", "-f", type=click.Choice(FAMILIES), help="Named family per n instead of random gnm graphs")
@click.option("--w", "w_list", type=int, multiple=True, help="Bandwidths (repeatable)")
@click.option("--algo", "-a", "algos", type=click.Choice(ALGORITHMS), multiple=True, help="Algorithms (repeatable)")
@click.option("--seed", "-s", type=int, help="Graph seed")
@click.option("--parallel", "-p", type=int, help="Number of parallel jobs")
@click.option("--output-dir", "-o", type=click.Path(), help="Output directory")
@click.option("--no-verify", is_flag=True, help="Skip the sequential WL cross-check")
@click.pass_context
def scan(ctx, n_list, m_list, family, w_list, algos, seed, parallel, output_dir, no_verify):
    """Round counts over an (n, m, w, algorithm) grid with a fitted round model.

    With ``--family`` each n gives one graph of that family and ``--m`` is ignored.
    """
    logger = ctx.obj["logger"]
    config = _load(ctx, seed=seed, parallel_jobs=parallel, output_dir=output_dir)
    out = _output_dir(config, "scan")
    try:
        with output_dir_lock(out):
            graphs = []
            if family:
                if m_list:
                    logger.warning(f"Ignoring --m for the {family} family")
                graphs = [gen_family(family, n) for n in n_list]
            else:
                for n in n_list:
                    for m in m_list:
                        if not n - 1 <= m <= n * (n - 1) // 2:
                            logger.warning(f"Skipping cell n={n} m={m}: no connected simple graph")
                            continue
                        graphs.append(gen_connected_gnm(n, m, config.seed))
            with timed(f"Scan of {len(graphs)} graphs"):
                rows, failures = round_scan(graphs, w_list, algos, config, verify=not no_verify)
            outputs = {"scan": write_rows_csv(out / "scan.csv", [r.to_dict() for r in rows], SCAN_COLUMNS)}
            if failures:
                outputs["failures"] = write_json(out / "failed_cells.json", failures)
                logger.warning(f"Wrote {len(failures)} failed cells to: {outputs['failures']}")
            problems = bound_violations(rows, config)
            wl_rows = [r for r in rows if r.algorithm == "wl"]
            fit = None
            if len(wl_rows) >= 3:
                a, b, c = fit_round_model(wl_rows)
                fit = {"a": a, "b": b, "c": c}
                click.echo(f"fit: rounds ~ {a:.3f}*D + {b:.3f}*m/w + {c:.3f} (frozen {config.wl_bound})")
            summary = {
                "cells": len(rows),
                "failures": len(failures),
                "bound_violations": problems,
                "fit": fit,
                "wl_bound": list(config.wl_bound),
                "vnode_bound": list(config.vnode_bound),
            }
            outputs["summary"] = write_json(out / "scan_summary.json", summary)
            write_manifest(out, "scan", _flags(ctx), config, outputs)
    except RLCongestError as e:
        _fail(logger, e)
    if failures or problems:
        logger.error(f"Scan: {len(failures)} failed cells, {len(problems)} bound violations")
        sys.exit(EXIT_VIOLATION)
    logger.info(f"Scan complete: {len(rows)} cells written to {outputs['scan']}")


@cli.command()
@click.argument("manifest", type=click.Path(exists=True))
@click.option("--output-dir", "-o", type=click.Path(), help="Write the replayed outputs here instead")
@click.pass_context
def rerun(ctx, manifest, output_dir):
    """Replay a run from its manifest."""
    logger = ctx.obj["logger"]
    try:
        data = read_manifest(Path(manifest))
    except RLCongestError as e:
        _fail(logger, e)
    if data.get("command") == "rerun":
        logger.error("Cannot replay a replay")
        sys.exit(EXIT_INVALID)
    command: click.Command | None = cli
    for name in str(data.get("command", "")).split():
        command = command.get_command(ctx, name) if isinstance(command, click.Group) else None
    if command is None or command is cli:
        logger.error(f"Unknown command in manifest: {data.get('command')!r}")
        sys.exit(EXIT_INVALID)

    flags = dict(data.get("flags", {}))
    if output_dir:
        if "output_dir" in flags:
            flags["output_dir"] = output_dir
        elif "output" in flags and flags["output"]:
            flags["output"] = str(Path(output_dir) / Path(flags["output"]).name)
    base = Config.from_dict(data.get("config", {}))
    if output_dir:
        base.output_dir = Path(output_dir)
    ctx.obj["base_config"] = base
    logger.info(f"Replaying '{data['command']}' from {manifest}")
    ctx.invoke(command, **flags)


def main():
    """Main entry point."""
    try:
        cli.main(obj={}, standalone_mode=False)
    except click.UsageError as e:
        e.show()
        sys.exit(EXIT_INVALID)
    except click.ClickException as e:
        e.show()
        sys.exit(e.exit_code)
    except click.Abort:
        click.echo("Aborted!", err=True)
        sys.exit(EXIT_INVALID)


if __name__ == "__main__":
    main()
