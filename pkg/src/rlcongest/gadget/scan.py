"""Round-count scans of the tree-based WL algorithm over gadget families."""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import asdict, dataclass
from typing import Any

import click

from ..algos import wl_congest
from ..congest import time_n_delta_log_n
from ..exceptions import ParameterError, RLCongestError
from ..graph import metrics
from ..utils import get_logger
from ..wl import wl_step_reference
from .eq import build_eq_gadget, random_spec

logger = get_logger()

MAX_SCAN_N = 64
MAX_SCAN_M = 2048


@dataclass(frozen=True)
class GadgetScanRow:
    n: int
    m: int
    w: int
    D: int
    rounds: int
    total_words: int

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def gadget_round_scan(
    n: int,
    m_list: Sequence[int],
    w_list: Sequence[int],
    seed: int = 1,
    path_len: int = 0,
    kappa: float = 8.0,
    parallel_jobs: int = 1,
    max_rounds: int = 100_000,
) -> tuple[list[GadgetScanRow], list[dict[str, Any]]]:
    """Run ``wl_congest`` on one random gadget per ``m`` at every width.

    The inputs for budget ``m`` come from the stream ``(seed, n, m)``, so all
    widths see the same graph. Every run is checked against the sequential
    WL step.

    Returns:
        Tuple of (rows sorted by (m, w), failures)

    Raises:
        ParameterError: If the grid leaves the desk-scale limits
    """
    if n > MAX_SCAN_N or any(m > MAX_SCAN_M for m in m_list):
        raise ParameterError(f"Gadget scans are limited to n <= {MAX_SCAN_N}, m <= {MAX_SCAN_M}")
    if any(w < 1 for w in w_list):
        raise ParameterError(f"Widths must be positive, got {list(w_list)}")
    gadgets = {m: build_eq_gadget(random_spec(n, m, seed, path_len=path_len)) for m in m_list}
    diameters = {m: int(metrics(gg.graph).diameter) for m, gg in gadgets.items()}
    cells = [(m, w) for m in m_list for w in w_list]
    rows: list[GadgetScanRow] = []
    failures: list[dict[str, Any]] = []

    def measure(m: int, w: int) -> GadgetScanRow:
        gg = gadgets[m]
        colors, log = wl_congest(gg.graph, gg.colors, w, time_n_delta_log_n(kappa), max_rounds)
        if colors != wl_step_reference(gg.graph, gg.colors):
            raise RLCongestError(f"wl_congest disagrees with the sequential WL step at m={m} w={w}")
        return GadgetScanRow(n, m, w, diameters[m], log.transmission_rounds, log.total_words)

    with ThreadPoolExecutor(max_workers=max(1, parallel_jobs)) as executor:
        futures = {executor.submit(measure, m, w): (m, w) for m, w in cells}
        with click.progressbar(as_completed(futures), length=len(cells), label="Gadget scan") as done:
            for future in done:
                m, w = futures[future]
                try:
                    rows.append(future.result())
                except RLCongestError as e:
                    logger.warning(f"Gadget cell m={m} w={w} failed: {e}")
                    failures.append({"n": n, "m": m, "w": w, "error": str(e)})

    rows.sort(key=lambda r: (r.m, r.w))
    failures.sort(key=lambda f: (f["m"], f["w"]))
    logger.info(f"Gadget scan n={n}: {len(rows)} cells, {len(failures)} failures")
    return rows, failures


def trend_violations(rows: Sequence[GadgetScanRow]) -> list[str]:
    """Cells where rounds drop as ``m`` grows at fixed ``(n, w)``, or grow with ``w`` at fixed ``(n, m)``."""
    by_w: dict[tuple[int, int], list[GadgetScanRow]] = defaultdict(list)
    by_m: dict[tuple[int, int], list[GadgetScanRow]] = defaultdict(list)
    for r in rows:
        by_w[(r.n, r.w)].append(r)
        by_m[(r.n, r.m)].append(r)
    problems = []
    for (n, w), group in sorted(by_w.items()):
        group.sort(key=lambda r: r.m)
        for prev, cur in zip(group, group[1:]):
            if cur.rounds < prev.rounds:
                problems.append(f"n={n} w={w}: rounds fall from {prev.rounds} to {cur.rounds} as m goes {prev.m}->{cur.m}")
    for (n, m), group in sorted(by_m.items()):
        group.sort(key=lambda r: r.w)
        for prev, cur in zip(group, group[1:]):
            if cur.rounds > prev.rounds:
                problems.append(f"n={n} m={m}: rounds rise from {prev.rounds} to {cur.rounds} as w goes {prev.w}->{cur.w}")
    for p in problems:
        logger.warning(f"Trend violation: {p}")
    return problems
