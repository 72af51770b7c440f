"""Run outputs: RoundLog exports, tabular CSVs, JSON summaries and manifests."""

from __future__ import annotations

import csv
import json
import platform
from collections import defaultdict
from collections.abc import Iterable, Mapping, Sequence
from datetime import datetime
from pathlib import Path
from typing import Any

from tabulate import tabulate

from ..config import MANIFEST_NAME, Config
from ..congest import RoundLog
from ..exceptions import InputError
from ..utils import get_logger

logger = get_logger()

STEP_COLUMNS = ("round", "node", "steps")
EDGE_COLUMNS = ("round", "edge_u", "edge_v", "direction", "words")
SCAN_COLUMNS = (
    "n",
    "m",
    "D",
    "max_degree",
    "w",
    "algorithm",
    "rounds",
    "total_words",
    "peak_node_steps",
)
GADGET_COLUMNS = ("n", "m", "w", "D", "rounds", "total_words")


def generate_run_name(command: str) -> str:
    """Timestamped stem for a run's outputs."""
    return f"{command}_{datetime.now().strftime('%Y_%m%d_%H%M%S')}"


def write_json(path: Path, data: Any) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as f:
        json.dump(data, f, indent=2)
        f.write("\n")
    return path


def write_rows_csv(path: Path, rows: Iterable[Mapping[str, Any] | Sequence[Any]], columns: Sequence[str]) -> Path:
    """Write rows (mappings or positional sequences) under a fixed header."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(columns)
        for row in rows:
            if isinstance(row, Mapping):
                writer.writerow([row[c] for c in columns])
            else:
                writer.writerow(list(row))
    return path


def read_rows_csv(path: Path) -> list[dict[str, str]]:
    path = Path(path)
    if not path.exists():
        raise InputError(f"CSV file not found: {path}")
    with open(path, newline="") as f:
        return list(csv.DictReader(f))


def write_roundlog(log: RoundLog, directory: Path, stem: str = "roundlog") -> dict[str, Path]:
    """Export per-node steps, per-edge words and the summary JSON.

    Returns:
        Paths keyed ``steps``, ``edges`` and ``summary``
    """
    directory = Path(directory)
    summary = dict(log.summary())
    summary["phases"] = [{"label": label, "rounds": rounds} for label, rounds in log.phases]
    summary["dropped_words"] = log.dropped_words
    return {
        "steps": write_rows_csv(directory / f"{stem}_steps.csv", log.step_rows(), STEP_COLUMNS),
        "edges": write_rows_csv(directory / f"{stem}_edges.csv", log.edge_rows(), EDGE_COLUMNS),
        "summary": write_json(directory / f"{stem}_summary.json", summary),
    }


def write_manifest(
    directory: Path,
    command: str,
    flags: Mapping[str, Any],
    config: Config,
    outputs: Mapping[str, Path] | None = None,
    extra: Mapping[str, Any] | None = None,
) -> Path:
    """Record everything needed to rerun a command next to its outputs."""
    from .. import __version__

    manifest = {
        "command": command,
        "flags": {k: (str(v) if isinstance(v, Path) else v) for k, v in flags.items()},
        "config": config.to_dict(),
        "version": __version__,
        "python": platform.python_version(),
        "created": datetime.now().isoformat(timespec="seconds"),
        "outputs": {k: str(v) for k, v in (outputs or {}).items()},
    }
    if extra:
        manifest.update(extra)
    path = write_json(Path(directory) / MANIFEST_NAME, manifest)
    logger.debug(f"Manifest written to {path}")
    return path


def read_json(path: Path) -> Any:
    path = Path(path)
    if not path.exists():
        raise InputError(f"JSON file not found: {path}")
    try:
        with open(path) as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: {e}") from e


def read_manifest(path: Path) -> dict[str, Any]:
    """Load a manifest from its file or from the run directory holding it."""
    path = Path(path)
    if path.is_dir():
        path = path / MANIFEST_NAME
    return read_json(path)


def default_grouping(columns: Sequence[str]) -> list[str]:
    """Grouping keys for a known CSV layout: scans by algorithm and width, gadgets by size."""
    if "algorithm" in columns:
        return ["algorithm", "w"]
    if "rounds" in columns:
        return ["n", "m"]
    return []


def _number(text: str) -> float | None:
    try:
        return float(text)
    except (TypeError, ValueError):
        return None


def summarize_rows(
    rows: Sequence[Mapping[str, str]],
    group_by: Sequence[str],
    tablefmt: str = "github",
) -> str:
    """Group CSV rows and render count, mean and max of every numeric column."""
    if not rows:
        return "(no rows)"
    columns = list(rows[0])
    for key in group_by:
        if key not in columns:
            raise InputError(f"Unknown grouping column {key!r}; have {columns}")
    numeric = [
        c for c in columns if c not in group_by and all(_number(r[c]) is not None for r in rows)
    ]
    groups: dict[tuple[str, ...], list[Mapping[str, str]]] = defaultdict(list)
    for r in rows:
        groups[tuple(r[k] for k in group_by)].append(r)

    def order(key: tuple[str, ...]) -> tuple:
        return tuple((0, _number(k), "") if _number(k) is not None else (1, 0.0, k) for k in key)

    table = []
    for key in sorted(groups, key=order):
        members = groups[key]
        line: list[Any] = [*key, len(members)]
        for c in numeric:
            values = [_number(r[c]) for r in members]
            line.extend([sum(values) / len(values), max(values)])
        table.append(line)
    headers = [*group_by, "count"]
    for c in numeric:
        headers.extend([f"{c} mean", f"{c} max"])
    return tabulate(table, headers=headers, tablefmt=tablefmt, floatfmt=".4g")
