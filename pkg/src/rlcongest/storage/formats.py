"""Graph, color and distance-matrix files."""

from __future__ import annotations

import json
from collections.abc import Sequence
from pathlib import Path

import numpy as np

from ..exceptions import InputError
from ..graph import AttributedGraph, ColorVector

JSON_SUFFIX = ".json"


def _format_graph_text(g: AttributedGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges)
    return "\n".join(lines) + "\n"


def _parse_graph_text(text: str, source: Path) -> AttributedGraph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 2:
        raise InputError(f"{source}: first line must be 'n m'")
    try:
        n, m = (int(t) for t in rows[0])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as e:
        raise InputError(f"{source}: {e}") from e
    if len(edges) != m:
        raise InputError(f"{source}: header announces {m} edges, found {len(edges)}")
    g = AttributedGraph.from_edges(n, edges)
    if g.m != m:
        raise InputError(f"{source}: duplicate edges")
    return g


def write_graph(path: Path, g: AttributedGraph) -> Path:
    """Write ``g`` as text ``n m`` plus one ``u v`` line per edge, or as JSON for ``.json`` paths.

    The JSON form also carries features, labels and overlay bookkeeping.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    if path.suffix == JSON_SUFFIX:
        data = {
            "n": g.n,
            "edges": [list(e) for e in g.sorted_edges],
            "features": [list(f) for f in g.features],
            "labels": list(g.labels) if g.labels is not None else None,
            "virtual_edges": [list(e) for e in sorted(g.virtual_edges)],
            "virtual_node": g.virtual_node,
        }
        path.write_text(json.dumps(data, indent=2) + "\n")
    else:
        path.write_text(_format_graph_text(g))
    return path


def read_graph(path: Path) -> AttributedGraph:
    """Read a graph in either format.

    Raises:
        InputError: If the file is missing or malformed
    """
    path = Path(path)
    if not path.exists():
        raise InputError(f"Graph file not found: {path}")
    text = path.read_text()
    if path.suffix != JSON_SUFFIX:
        return _parse_graph_text(text, path)
    try:
        data = json.loads(text)
        n = int(data["n"])
        edges = [tuple(int(t) for t in e) for e in data.get("edges", [])]
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
        raise InputError(f"{path}: malformed graph JSON ({e})") from e
    g = AttributedGraph.from_edges(n, edges, data.get("features") or None, data.get("labels"))
    virtual = frozenset(tuple(int(t) for t in e) for e in data.get("virtual_edges") or [])
    if virtual or data.get("virtual_node") is not None:
        g = AttributedGraph(
            n=g.n,
            edges=g.edges,
            features=g.features,
            labels=g.labels,
            virtual_edges=virtual,
            virtual_node=data.get("virtual_node"),
        )
    return g


def write_colors(path: Path, colors: Sequence[int]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("".join(f"{int(c)}\n" for c in colors))
    return path


def read_colors(path: Path) -> ColorVector:
    """One integer per line; blank lines are ignored.

    Raises:
        InputError: If the file is missing or a line is not an integer
    """
    path = Path(path)
    if not path.exists():
        raise InputError(f"Color file not found: {path}")
    try:
        return tuple(int(line) for line in path.read_text().split())
    except ValueError as e:
        raise InputError(f"{path}: {e}") from e


def write_distance_csv(path: Path, dist: np.ndarray) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    dist = np.asarray(dist)
    fmt = "%d" if np.issubdtype(dist.dtype, np.integer) else "%.12g"
    np.savetxt(path, dist.reshape(dist.shape[0], -1), fmt=fmt, delimiter=",")
    return path


def read_distance_csv(path: Path) -> np.ndarray:
    path = Path(path)
    if not path.exists():
        raise InputError(f"Distance file not found: {path}")
    return np.loadtxt(path, delimiter=",", ndmin=2)
