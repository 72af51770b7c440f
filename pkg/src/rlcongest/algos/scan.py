"""Round scans over graphs and bandwidths, plus a least-squares round model."""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import asdict, dataclass
from typing import Any

import click
import numpy as np

from ..config import Config
from ..congest import RoundLog, time_delta_polylog, time_n_delta_log_n
from ..exceptions import DisconnectedGraphError, ParameterError, RLCongestError
from ..graph import (
    AttributedGraph,
    add_virtual_edges,
    add_virtual_node,
    metrics,
    uniform_colors,
)
from ..utils import get_logger
from ..wl import wl_step_reference
from .virtual_edges import wl_virtual_edges
from .virtual_node import wl_virtual_node
from .wl_tree import global_compute, wl_congest

logger = get_logger()

ALGORITHMS = ("wl", "vnode", "vedge", "global")


@dataclass(frozen=True)
class ScanRow:
    n: int
    m: int
    D: int
    max_degree: int
    w: int
    algorithm: str
    rounds: int
    total_words: int
    peak_node_steps: int

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def run_algorithm(
    name: str,
    g: AttributedGraph,
    x: Sequence[int] | None,
    w: int,
    config: Config,
) -> tuple[Sequence[int], RoundLog]:
    """Run one WL-style algorithm on a plain graph, adding whatever overlay it needs.

    Args:
        name: One of ``ALGORITHMS``
        g: Original graph
        x: Input colors (uniform when None)
        w: Bandwidth
        config: Supplies kappa, seed, overlay delta, routing backend and L

    Returns:
        Tuple of (colors of the original nodes, RoundLog)
    """
    x = tuple(x) if x is not None else uniform_colors(g.n)
    kwargs = {"max_rounds": config.max_rounds, "threads": config.threads}
    if name == "wl":
        return wl_congest(g, x, w, time_n_delta_log_n(config.kappa), **kwargs)
    if name == "vnode":
        hub = add_virtual_node(g)
        return wl_virtual_node(hub, x, w, time_n_delta_log_n(config.kappa), **kwargs)
    if name == "vedge":
        overlay = add_virtual_edges(g, config.overlay_delta, config.seed)
        return wl_virtual_edges(
            overlay,
            x,
            w,
            config.tokens_per_node,
            config.backend,
            time_delta_polylog(config.kappa),
            **kwargs,
        )
    if name == "global":
        with_colors = AttributedGraph.from_edges(g.n, g.sorted_edges, [(c,) for c in x])
        return global_compute(
            with_colors,
            lambda h: list(wl_step_reference(h, [f[0] for f in h.features])),
            w,
            **kwargs,
        )
    raise ParameterError(f"Unknown algorithm {name!r}; expected one of {ALGORITHMS}")


def round_scan(
    graphs: Sequence[AttributedGraph],
    widths: Sequence[int],
    algorithms: Sequence[str],
    config: Config,
    verify: bool = True,
) -> tuple[list[ScanRow], list[dict[str, Any]]]:
    """Measure transmission rounds for every (graph, width, algorithm) combination.

    Jobs run on ``config.parallel_jobs`` threads; rows come back in job order.
    A job that raises is reported as a failure instead of aborting the scan.

    Returns:
        Tuple of (rows, failures)
    """
    for name in algorithms:
        if name not in ALGORITHMS:
            raise ParameterError(f"Unknown algorithm {name!r}; expected one of {ALGORITHMS}")
    jobs = [(gi, w, name) for gi in range(len(graphs)) for w in widths for name in algorithms]
    shape = [metrics(g) for g in graphs]
    for gi, gm in enumerate(shape):
        if not gm.connected:
            raise DisconnectedGraphError(f"Scan graph {gi} is not connected")
    results: dict[int, ScanRow] = {}
    failures: list[dict[str, Any]] = []

    def measure(job_index: int) -> ScanRow:
        gi, w, name = jobs[job_index]
        g = graphs[gi]
        colors, log = run_algorithm(name, g, None, w, config)
        if verify and tuple(colors) != wl_step_reference(g, uniform_colors(g.n)):
            raise RLCongestError(f"{name} disagrees with the sequential WL step on graph {gi}")
        gm = shape[gi]
        return ScanRow(
            n=g.n,
            m=g.m,
            D=int(gm.diameter),
            max_degree=gm.max_degree,
            w=w,
            algorithm=name,
            rounds=log.transmission_rounds,
            total_words=log.total_words,
            peak_node_steps=log.peak_node_steps,
        )

    def record(job_index: int, outcome: Callable[[], ScanRow]) -> None:
        try:
            results[job_index] = outcome()
        except RLCongestError as e:
            gi, w, name = jobs[job_index]
            logger.warning(f"Scan job graph={gi} w={w} {name} failed: {e}")
            failures.append({"graph": gi, "w": w, "algorithm": name, "error": str(e)})

    if config.parallel_jobs > 1:
        with ThreadPoolExecutor(max_workers=config.parallel_jobs) as executor:
            futures = {executor.submit(measure, i): i for i in range(len(jobs))}
            with click.progressbar(
                as_completed(futures), length=len(jobs), label="Scanning"
            ) as completed:
                for future in completed:
                    record(futures[future], future.result)
    else:
        with click.progressbar(range(len(jobs)), label="Scanning") as indices:
            for i in indices:
                record(i, lambda i=i: measure(i))

    rows = [results[i] for i in sorted(results)]
    failures.sort(key=lambda f: (f["graph"], f["w"], f["algorithm"]))
    logger.info(f"Scan complete: {len(rows)} rows, {len(failures)} failures")
    return rows, failures


def fit_round_model(rows: Sequence[ScanRow]) -> tuple[float, float, float]:
    """Least-squares fit of ``rounds ≈ a·D + b·m/w + c``.

    Raises:
        ParameterError: If there are fewer than three rows
    """
    if len(rows) < 3:
        raise ParameterError(f"Need at least 3 rows to fit the round model, got {len(rows)}")
    design = np.array([[r.D, r.m / r.w, 1.0] for r in rows], dtype=np.float64)
    target = np.array([r.rounds for r in rows], dtype=np.float64)
    coef, *_ = np.linalg.lstsq(design, target, rcond=None)
    return float(coef[0]), float(coef[1]), float(coef[2])


def round_bound(algorithm: str, D: int, m: int, max_degree: int, w: int, config: Config) -> int | None:
    """Frozen upper bound on transmission rounds, or None where only reporting applies.

    ``wl``: ``a·D + b·ceil(m/w) + c``; ``vnode``: ``b'·ceil(Δ/w) + c'``.
    """
    if algorithm == "wl":
        a, b, c = config.wl_bound
        return a * D + b * math.ceil(m / w) + c
    if algorithm == "vnode":
        b, c = config.vnode_bound
        return b * math.ceil(max_degree / w) + c
    return None


def tree_round_bound(height: int, words: int, w: int, slack: int) -> int:
    """Pipelined up- or downcast: ``height + ceil(words/w) + slack``."""
    return height + math.ceil(words / w) + slack


def bound_violations(rows: Sequence[ScanRow], config: Config) -> list[str]:
    problems = []
    for r in rows:
        cap = round_bound(r.algorithm, r.D, r.m, r.max_degree, r.w, config)
        if cap is not None and r.rounds > cap:
            problems.append(f"{r.algorithm} n={r.n} m={r.m} w={r.w}: {r.rounds} rounds > bound {cap}")
    for p in problems:
        logger.warning(f"Round bound exceeded: {p}")
    return problems
